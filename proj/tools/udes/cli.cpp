// Copyright 2026 The udes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "io.hpp"
#include "render.hpp"
#include "udes/design.hpp"
#include "udes/group.hpp"
#include "udes/qubit.hpp"
#include "udes/su2.hpp"
#include "udes/twirl.hpp"

namespace udes::cli {

namespace {

struct Options {
  std::string file;
  std::string builtin;
  std::string from;
  std::string method = "both";
  std::string out_path;
  std::string format = "text";
  int t = 2;
  double tol = 1e-10;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool strict = false;
};

struct Input {
  UnitarySet set;
  std::vector<std::string> labels;
  json info;
};

struct Outcome {
  int code = kOk;
  json report;
};

Input load_input(const Options& o, std::ostream& err) {
  if (!o.file.empty() && !o.builtin.empty()) {
    throw ParseError("give either --file or --builtin, not both");
  }
  json info;
  if (!o.builtin.empty()) {
    NamedDesign d = [&] {
      try {
        return named_design(o.builtin);
      } catch (const Error& e) {
        throw ParseError(e.what());
      }
    }();
    info["source"] = "builtin:" + d.name;
    info["digest"] = digest(unitary_set_json(d.set, d.labels));
    info["size"] = d.set.size();
    return {std::move(d.set), std::move(d.labels), std::move(info)};
  }
  if (o.file.empty()) throw ParseError("one of --file or --builtin is required");
  LoadedSet l = load_unitary_set(o.file, o.strict, o.tol);
  for (const auto& w : l.warnings) err << "warning: " << o.file << ": " << w << '\n';
  info["source"] = "file:" + o.file;
  info["digest"] = digest(unitary_set_json(l.set, l.labels));
  info["size"] = l.set.size();
  return {std::move(l.set), std::move(l.labels), std::move(info)};
}

json header(const std::string& command, const json& inputs, double tol) {
  return {{"command", command}, {"inputs", inputs}, {"tolerance", tol}};
}

json quaternion_json(const Quaternion& q) {
  return json::array({q.s, q.x, q.y, q.z});
}

json vec3_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

std::string exact_complex(Complex z) {
  const bool re0 = std::abs(z.real()) <= 1e-12;
  const bool im0 = std::abs(z.imag()) <= 1e-12;
  if (im0) return exact_or_number(z.real());
  std::string im = exact_or_number(z.imag());
  if (im == "1") im = "i";
  else if (im == "-1") im = "-i";
  else if (im == "1/2") im = "i/2";
  else if (im == "-1/2") im = "-i/2";
  else im += "i";
  if (re0) return im;
  return exact_or_number(z.real()) + (im.front() == '-' ? "" : "+") + im;
}

json design_report_json(const DesignReport& r, const FramePotentialReport& f,
                        const std::string& method) {
  json j{{"t", r.t}, {"is_design", r.is_design}, {"method", method}};
  if (method != "twirl") {
    j["frame_potential"] = f.value;
    j["haar_frame_potential"] = *f.haar_value;
    j["frame_gap"] = r.frame_gap;
  }
  if (method != "frame") {
    j["max_twirl_deviation"] = r.max_twirl_deviation;
    j["twirl_deviation_sq"] = r.twirl_deviation_sq;
  }
  j["method_agreement"] = r.method_agreement;
  return j;
}

Outcome cmd_verify(const Options& o, std::ostream& err) {
  if (o.method != "both" && o.method != "twirl" && o.method != "frame") {
    throw ParseError("--method must be twirl, frame or both");
  }
  if (o.t != 1 && o.t != 2) {
    throw Error(ErrorCode::UnsupportedOrder,
                "verification needs t in {1, 2}, got " + std::to_string(o.t));
  }
  Input in = load_input(o, err);
  const DesignReport r = verify_design(in.set, o.t, o.tol, o.threads);
  json rep = header("verify", in.info, o.tol);
  rep["result"] = design_report_json(r, frame_potential(in.set, o.t), o.method);
  return {r.is_design ? kOk : kVerifiedFalse, std::move(rep)};
}

Outcome cmd_construct(const Options& o, std::ostream& err) {
  Input in = [&] {
    const bool has_input = !o.file.empty() || !o.builtin.empty();
    if (o.from == "pauli" || (o.from.empty() && !has_input)) {
      if (has_input) throw ParseError("--from pauli takes no input file");
      NamedDesign b = named_design("pauli");
      json info{{"source", "builtin:pauli"},
                {"digest", digest(unitary_set_json(b.set, b.labels))},
                {"size", b.set.size()}};
      return Input{std::move(b.set), std::move(b.labels), std::move(info)};
    }
    if (!o.from.empty() && o.from != "file") {
      throw ParseError("--from must be pauli or file");
    }
    return load_input(o, err);
  }();

  const OneDesignFrame f = classify_min_1design(in.set);
  const UnitarySet ext = extend_to_2design(in.set);
  std::vector<std::string> labels;
  if (!in.labels.empty()) {
    labels = in.labels;
    const bool pauli_names = in.info["source"] == "builtin:pauli";
    for (const char* w : {"W", "W†"}) {
      const std::string lead = pauli_names ? w : std::string(w) + "~";
      for (const auto& l : in.labels) labels.push_back(l == "1" ? lead : lead + l);
    }
  }

  json frame{{"V", matrix_json(f.v)},
             {"Vp", matrix_json(f.vp)},
             {"phases", json::array()},
             {"permutation", f.permutation}};
  for (const auto& p : f.phases) frame["phases"].push_back(complex_json(p));

  json rep = header("construct", in.info, o.tol);
  rep["frame"] = std::move(frame);
  rep["W_tilde"] = matrix_json(f.v * w_gate() * f.v.adjoint());
  const json set_doc = unitary_set_json(ext, labels);
  json result{{"size", ext.size()},
              {"digest", digest(set_doc)},
              {"clifford_bound", clifford_bound(2)}};
  for (int t : {1, 2}) {
    const DesignReport r = verify_design(ext, t, o.tol, o.threads);
    result["verify_t" + std::to_string(t)] =
        design_report_json(r, frame_potential(ext, t), "both");
  }
  if (!o.out_path.empty()) {
    save_json(o.out_path, set_doc);
    result["written_to"] = o.out_path;
  } else {
    result["set"] = set_doc;
  }
  rep["result"] = std::move(result);
  return {kOk, std::move(rep)};
}

Outcome cmd_frame_potential(const Options& o, std::ostream& err) {
  if (o.t < 1) throw ParseError("--t must be >= 1");
  Input in = load_input(o, err);
  const FramePotentialReport f = frame_potential(in.set, o.t);
  json rep = header("frame-potential", in.info, o.tol);
  rep["result"] = {{"t", f.t},
                   {"value", f.value},
                   {"haar_value", f.haar_value ? json(*f.haar_value) : json()},
                   {"gap", f.gap ? json(*f.gap) : json()}};
  return {kOk, std::move(rep)};
}

Outcome cmd_group(const Options& o, std::ostream& err) {
  Input in = load_input(o, err);
  const Su2Closure c = su2_closure(in.set);
  const auto qs = c.quaternions();
  const GroupProfile g = group_profile(qs, std::max(o.tol, 1e-12));
  json hist = json::object();
  for (const auto& [ord, count] : g.order_histogram) hist[std::to_string(ord)] = count;
  json cosets;
  if (g.cosets) {
    cosets = {{"subgroup", g.cosets->subgroup}, {"cosets", json::array()}};
    for (const auto& members : g.cosets->cosets) {
      cosets["cosets"].push_back({{"representative", quaternion_json(qs[members.front()])},
                                  {"members", members}});
    }
  }
  json rep = header("group", in.info, o.tol);
  rep["result"] = {{"closure_size", c.closure.size()},
                   {"is_group", g.is_group},
                   {"order", g.order},
                   {"order_histogram", hist},
                   {"element_orders", g.element_orders},
                   {"center_size", g.center_size},
                   {"cosets", cosets},
                   {"semidirect_check", g.semidirect_check}};
  return {kOk, std::move(rep)};
}

Outcome cmd_geometry(const Options& o, std::ostream& err) {
  Input in = load_input(o, err);
  const Su2Closure c = su2_closure(in.set);
  const auto qs = c.quaternions();
  const PolytopeId p = polytope_identify(qs, std::max(o.tol, 1e-12));
  json spectrum = json::array();
  for (const auto& s : p.distance_spectrum) {
    spectrum.push_back({{"length", s.length}, {"count", s.count}});
  }
  json points = json::array();
  const auto images = so3_image_table(c);
  for (std::size_t k = 0; k < qs.size(); k += 2) {
    const Vec3 v = rotation_vector(qs[k]);
    json row{{"element", k / 2},
             {"quaternion", quaternion_json(qs[k])},
             {"s3_exact", render_s3(qs[k])},
             {"so3_angle", images[k / 2].angle},
             {"so3_axis", vec3_json(images[k / 2].axis)},
             {"so3_vector", vec3_json(v)},
             {"so3_exact", render_so3(v)}};
    if (k / 2 < in.labels.size()) row["label"] = in.labels[k / 2];
    try {
      row["demitesseract"] = to_string(demitesseract_class(qs[k]));
    } catch (const Error&) {
    }
    points.push_back(std::move(row));
  }
  json rep = header("geometry", in.info, o.tol);
  rep["result"] = {{"vertices", qs.size()},
                   {"polytope", to_string(p.kind)},
                   {"uniform", p.uniform},
                   {"distance_spectrum", spectrum},
                   {"antipodal_pairs", points}};
  return {kOk, std::move(rep)};
}

Outcome cmd_mc(const Options& o) {
  if (o.t != 1 && o.t != 2) {
    throw Error(ErrorCode::UnsupportedOrder,
                "Monte-Carlo check needs t in {1, 2}, got " + std::to_string(o.t));
  }
  if (o.samples == 0) throw ParseError("--samples must be positive");
  HaarSampler h(o.seed);
  const auto est = mc_haar_twirl_basis(h, o.t, o.samples);
  const std::size_t d = o.t == 1 ? 2 : 4;
  json basis = json::array();
  double max_dev = 0.0;
  double max_ratio = 0.0;
  for (std::size_t k = 0; k < est.size(); ++k) {
    const Mat e = Mat::unit(d, k / d, k % d);
    const double dev = hs_distance(est[k].mean, haar_twirl(o.t, e));
    const double ratio = est[k].std_error > 0 ? dev / est[k].std_error : 0.0;
    max_dev = std::max(max_dev, dev);
    max_ratio = std::max(max_ratio, ratio);
    basis.push_back({{"i", k / d}, {"j", k % d}, {"deviation", dev},
                     {"std_error", est[k].std_error}});
  }
  json rep = header("mc", {{"t", o.t}, {"samples", o.samples}, {"seed", o.seed}},
                    o.tol);
  rep["result"] = {{"max_deviation", max_dev},
                   {"max_deviation_in_std_errors", max_ratio},
                   {"within_5_std_errors", max_ratio <= 5.0},
                   {"basis", basis}};
  return {kOk, std::move(rep)};
}

Outcome cmd_table(const Options& o) {
  json rows = json::array();
  for (const auto& r : binary_tetrahedral_table()) {
    json pauli = json::array();
    json pauli_exact = json::array();
    for (const auto& c : r.pauli) {
      pauli.push_back(complex_json(c));
      pauli_exact.push_back(exact_complex(c));
    }
    rows.push_back({{"element", (r.sign > 0 ? "+" : "-") + r.row},
                    {"pauli", pauli},
                    {"pauli_exact", pauli_exact},
                    {"quaternion", quaternion_json(r.q)},
                    {"s3_exact", render_s3(r.q)},
                    {"exp_angle", r.exp_form.angle},
                    {"exp_axis", vec3_json(r.exp_form.axis)},
                    {"so3", vec3_json(r.so3)},
                    {"so3_exact", render_so3(r.so3)}});
  }
  json rep = header("table", {{"source", "binary tetrahedral group"}}, o.tol);
  rep["result"] = {{"rows", rows}};
  return {kOk, std::move(rep)};
}

// Pads to a display width, counting UTF-8 code points rather than bytes.
std::string pad(const std::string& s, std::size_t width) {
  std::size_t shown = 0;
  for (unsigned char c : s) shown += (c & 0xC0) != 0x80;
  return s + std::string(width > shown ? width - shown : 1, ' ');
}

std::string render_table_text(const json& rep) {
  std::ostringstream out;
  out << "command: table\ntolerance: " << rep["tolerance"].dump() << "\n\n";
  out << pad("element", 9) << pad("Pauli (1,X,Y,Z)", 27) << pad("S^3", 19)
      << pad("SO(3)", 23) << "exp angle\n";
  for (const auto& r : rep["result"]["rows"]) {
    std::string p = "(";
    for (std::size_t k = 0; k < 4; ++k) {
      p += (k ? "," : "") + r["pauli_exact"][k].get<std::string>();
    }
    p += ")";
    out << pad(r["element"].get<std::string>(), 9) << pad(p, 27)
        << pad(r["s3_exact"].get<std::string>(), 19)
        << pad(r["so3_exact"].get<std::string>(), 23) << r["exp_angle"].dump()
        << '\n';
  }
  return out.str();
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::UnsupportedOrder: return kUnsupported;
    case ErrorCode::NotMinimal1Design:
    case ErrorCode::NotOrthogonalBasis:
    case ErrorCode::NotUnitaryElements: return kPrecondition;
    case ErrorCode::ProportionalElements: return kStructure;
    default: return kParseFailure;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Unitary 1- and 2-designs of U(2)", "udes"};
  app.require_subcommand(1);
  Options o;

  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--file", o.file, "Unitary-set JSON file");
    sub->add_option("--builtin", o.builtin, "Built-in set: pauli, B0, D, D0, D1, D2");
    sub->add_flag("--strict", o.strict, "Reject unknown fields in input files");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "Tolerance")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", o.format, "Report format")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", o.out_path, "Write output here instead of stdout");
  };

  auto* verify = app.add_subcommand("verify", "Check the t-design property");
  add_source(verify);
  add_common(verify);
  verify->add_option("--t", o.t, "Design order (1 or 2)");
  verify->add_option("--method", o.method, "twirl, frame or both");
  verify->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* construct = app.add_subcommand("construct", "Complete a minimal 1-design to a 2-design");
  add_source(construct);
  add_common(construct);
  construct->add_option("--from", o.from, "pauli or file");
  construct->add_option("input", o.file, "Input file (same as --file)");
  construct->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* fp = app.add_subcommand("frame-potential", "Frame potential of order t");
  add_source(fp);
  add_common(fp);
  fp->add_option("--t", o.t, "Order");

  auto* group = app.add_subcommand("group", "Group structure of the SU(2) closure");
  add_source(group);
  add_common(group);

  auto* geometry = app.add_subcommand("geometry", "Polytope and SO(3) images of the SU(2) closure");
  add_source(geometry);
  add_common(geometry);

  auto* mc = app.add_subcommand("mc", "Monte-Carlo check of the Haar twirl oracles");
  add_common(mc);
  mc->add_option("--t", o.t, "Order (1 or 2)");
  mc->add_option("--samples", o.samples, "Number of Haar samples");
  mc->add_option("--seed", o.seed, "Random seed");

  auto* table = app.add_subcommand("table", "Faces of the 24 binary tetrahedral elements");
  add_common(table);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out;
    std::ostringstream o_err;
    const int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? kOk : kParseFailure;
  }

  try {
    Outcome r;
    if (verify->parsed()) r = cmd_verify(o, err);
    else if (construct->parsed()) r = cmd_construct(o, err);
    else if (fp->parsed()) r = cmd_frame_potential(o, err);
    else if (group->parsed()) r = cmd_group(o, err);
    else if (geometry->parsed()) r = cmd_geometry(o, err);
    else if (mc->parsed()) r = cmd_mc(o);
    else r = cmd_table(o);

    std::string text;
    if (o.format == "json") {
      text = r.report.dump(2) + "\n";
    } else if (table->parsed()) {
      text = render_table_text(r.report);
    } else {
      text = render_text(r.report);
    }
    if (!o.out_path.empty() && !construct->parsed()) {
      std::ofstream f(o.out_path);
      if (!f) throw ParseError("cannot write '" + o.out_path + "'");
      f << text;
    } else {
      out << text;
    }
    return r.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace udes::cli
