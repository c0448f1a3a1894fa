// Copyright 2026 The rotsys Authors
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

#include "rotsys/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "rotsys/compare.hpp"
#include "rotsys/enumerate.hpp"
#include "rotsys/error.hpp"
#include "rotsys/io.hpp"
#include "rotsys/polyhedral.hpp"
#include "rotsys/report.hpp"
#include "rotsys/witness.hpp"

namespace rotsys::cli {

namespace {

using report::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

EmbeddedGraph load_embedding(const std::string& path) { return parse_rotation_file(read_file(path)); }

// GRAPH arguments: an existing file holding a rotation file (its underlying
// graph is used) or a graph6 line; otherwise the argument itself is graph6.
Graph load_graph(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return parse_graph6(arg);
  std::string text = read_file(arg);
  if (looks_like_rotation_file(text)) return parse_rotation_file(text).underlying();
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return parse_graph6(line);
  }
  return parse_graph6("");
}

std::string dart_text(const Dart& d) {
  return "(" + std::to_string(d.tail) + "," + std::to_string(d.head) + ")";
}

std::string face_text(const FaceWalk& w) {
  std::string s;
  for (const Dart& d : w.darts()) {
    if (!s.empty()) s += ' ';
    s += dart_text(d);
  }
  return s;
}

std::string intersection_text(const IntersectionKind& k) {
  std::string s(to_string(k.tag));
  s += " shared vertices {";
  for (std::size_t i = 0; i < k.shared_vertices.size(); ++i) {
    s += (i ? "," : "") + std::to_string(k.shared_vertices[i]);
  }
  s += "} shared edges {";
  for (std::size_t i = 0; i < k.shared_edges.size(); ++i) {
    s += (i ? " " : "") + std::string("{") + std::to_string(k.shared_edges[i].u) + "," +
         std::to_string(k.shared_edges[i].v) + "}";
  }
  return s + "}";
}

std::string genera_text(const std::vector<int>& genera) {
  if (genera.empty()) return "none";
  std::string s;
  for (int g : genera) s += (s.empty() ? "" : ",") + std::to_string(g);
  return s;
}

void merge(Json& into, Json from) {
  for (auto& [key, value] : from.items()) into[key] = std::move(value);
}

struct Options {
  bool json = false;
  std::uint64_t budget = kDefaultBudget;
};


int cmd_faces(const std::string& file, Json& j, std::ostream& out) {
  EmbeddedGraph g = load_embedding(file);
  auto faces = trace_faces(g);
  j["command"] = "faces";
  j["input"] = file;
  Json arr = Json::array();
  for (const auto& f : faces) arr.push_back(report::face(f));
  j["faces"] = std::move(arr);
  out << "faces: " << faces.size() << "\n";
  for (std::size_t i = 0; i < faces.size(); ++i) {
    out << "face " << i << " (length " << faces[i].size() << "): " << face_text(faces[i]) << "\n";
  }
  return kOk;
}

int cmd_genus(const std::string& file, Json& j, std::ostream& out) {
  EmbeddedGraph g = load_embedding(file);
  const std::size_t f = count_faces(g);
  const int gamma = genus(g);
  j["command"] = "genus";
  j["input"] = file;
  j["vertices"] = g.num_vertices();
  j["edges"] = g.num_edges();
  j["faces"] = f;
  j["genus"] = gamma;
  out << "genus: " << gamma << "\n"
      << "vertices: " << g.num_vertices() << ", edges: " << g.num_edges() << ", faces: " << f
      << "\n";
  return kOk;
}

int cmd_check(const std::string& file, Json& j, std::ostream& out) {
  EmbeddedGraph g = load_embedding(file);
  const auto verdict = check_polyhedral(g);
  const int gamma = genus(g);
  j["command"] = "check";
  j["input"] = file;
  j["polyhedral"] = verdict.polyhedral;
  j["genus"] = gamma;
  j["violation"] = verdict.violation ? report::violation(*verdict.violation) : Json(nullptr);
  out << "polyhedral: " << (verdict.polyhedral ? "true" : "false") << ", genus: " << gamma << "\n";
  if (verdict.violation) {
    if (const auto* ns = std::get_if<NonSimpleFace>(&*verdict.violation)) {
      out << "violation: NonSimpleFace face " << ns->face_index << ": " << face_text(ns->face)
          << "\n";
    } else {
      const auto& bp = std::get<BadPair>(*verdict.violation);
      out << "violation: BadPair faces " << bp.first_index << " and " << bp.second_index << ": "
          << intersection_text(bp.kind) << "\n";
    }
  }
  return verdict.polyhedral ? kOk : kClaimFails;
}

int cmd_dual(const std::string& file, Json& j, std::ostream& out) {
  EmbeddedGraph g = load_embedding(file);
  const DualGraph d = build_dual(g);
  j["command"] = "dual";
  j["input"] = file;
  merge(j, report::dual(d));
  out << "dual: " << d.num_vertices << " vertices, " << d.edges.size() << " edges, "
      << d.loop_count() << " loops, " << d.parallel_count() << " parallel edges\n"
      << "simple: " << (d.is_simple() ? "true" : "false") << "\n";
  return d.is_simple() ? kOk : kClaimFails;
}

int cmd_compare(const std::string& ref_file, const std::string& cand_file, Json& j,
                std::ostream& out) {
  EmbeddedGraph ref = load_embedding(ref_file);
  EmbeddedGraph cand = load_embedding(cand_file);
  const TypeAssignment t = classify_types(ref, cand);
  const bool eq = equivalent(ref, cand);
  j["command"] = "compare";
  j["reference"] = ref_file;
  j["candidate"] = cand_file;
  merge(j, report::types(t));
  j["equivalent"] = eq;
  out << "relation: " << to_string(t.relation) << "\n" << "types:";
  for (VertexType vt : t.types) out << ' ' << to_string(vt);
  out << "\n" << "equivalent: " << (eq ? "true" : "false") << "\n";
  return eq ? kOk : kClaimFails;
}

int cmd_witness(const std::string& ref_file, const std::string& cand_file, Json& j,
                std::ostream& out) {
  EmbeddedGraph ref = load_embedding(ref_file);
  EmbeddedGraph cand = load_embedding(cand_file);
  const Witness w = extract_witness(ref, cand);
  j["command"] = "witness";
  j["reference"] = ref_file;
  j["candidate"] = cand_file;
  merge(j, report::witness(w));
  j["verified"] = true;

  if (const auto* t2 = std::get_if<Type2Vertex>(&w.anchor)) {
    out << "anchor: Type2Vertex " << t2->vertex << " angles {" << dart_text(t2->first_angle.first)
        << " " << dart_text(t2->first_angle.second) << "} {" << dart_text(t2->second_angle.first)
        << " " << dart_text(t2->second_angle.second) << "}\n";
  } else {
    out << "anchor: MixedEdge " << dart_text(std::get<MixedEdge>(w.anchor).edge) << "\n";
  }
  if (const auto* ns = std::get_if<NonSimpleFace>(&w.evidence)) {
    out << "evidence: NonSimpleFace face " << ns->face_index << " (length " << ns->face.size()
        << "): " << face_text(ns->face) << "\n";
  } else {
    const auto& cp = std::get<CrossingPair>(w.evidence);
    out << "evidence: CrossingPair\n"
        << "  face: " << face_text(cp.face) << "\n"
        << "  other: " << face_text(cp.other) << "\n"
        << "  intersection: " << intersection_text(cp.kind) << "\n";
  }
  out << "verified: true\n";
  return kOk;
}

int cmd_census(const std::string& arg, const Options& opt, Json& j, std::ostream& out) {
  const Graph graph = load_graph(arg);
  const CensusReport c = genus_census(graph, arg, opt.budget);
  j["command"] = "census";
  merge(j, report::census(c));
  out << "graph: " << c.graph_id << "\n" << "rotation systems: " << c.total << "\n";
  for (const auto& [g, raw] : c.raw_by_genus) {
    out << "genus " << g << ": " << raw << " systems, " << c.classes_by_genus.at(g)
        << " mirror classes\n";
  }
  out << "polyhedral classes: " << c.polyhedral_classes << "\n";
  for (const auto& rep : c.polyhedral_representatives) {
    out << "representative (genus " << genus(rep) << "):\n" << serialize_rotation_file(rep);
  }
  return kOk;
}

int cmd_verify(const std::string& claim, const std::string& arg, const Options& opt, Json& j,
               std::ostream& out) {
  const Graph graph = load_graph(arg);
  VerificationResult r;
  std::string label;
  if (claim == "whitney") {
    r = verify_whitney(graph, opt.budget);
    label = "polyhedral classes";
  } else if (claim == "cubic") {
    r = verify_cubic_corollary(graph, opt.budget);
    label = "simple-dual classes";
  } else {
    r = verify_low_connectivity(graph, opt.budget);
    label = "polyhedral classes";
  }
  j["command"] = "verify";
  j["graph"] = arg;
  merge(j, report::verification(r));
  out << "claim: " << to_string(r.claim) << "\n"
      << "pass: " << (r.pass ? "true" : "false") << "\n"
      << "rotation systems: " << r.systems_checked << "\n"
      << label << ": " << r.hypothesis_classes << ", genus: " << genera_text(r.hypothesis_genera)
      << "\n";
  if (r.counterexample) {
    out << "counterexample (index " << *r.counterexample_index << ", genus "
        << genus(*r.counterexample) << "):\n"
        << serialize_rotation_file(*r.counterexample);
  }
  return r.pass ? kOk : kClaimFails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rotation systems, polyhedral embeddings and uniqueness certificates", "rotsys"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Emit a JSON report");
  app.add_option("--budget", opt.budget, "Maximum number of rotation systems to enumerate")
      ->check(CLI::PositiveNumber);

  std::string file, ref, cand, graph, claim;
  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  sub("faces", "List the face walks of an embedding")
      ->add_option("FILE", file, "Rotation file")->required();
  sub("genus", "Euler genus of an embedding")->add_option("FILE", file, "Rotation file")->required();
  sub("check", "Polyhedrality verdict with the first violation")
      ->add_option("FILE", file, "Rotation file")->required();
  sub("dual", "Dual multigraph summary and simplicity")
      ->add_option("FILE", file, "Rotation file")->required();
  for (const char* name : {"compare", "witness"}) {
    CLI::App* s = sub(name, std::string_view(name) == "compare"
                                ? "Per-vertex types of CAND against REF"
                                : "Certificate that CAND is not polyhedral");
    s->add_option("REF", ref, "Reference rotation file")->required();
    s->add_option("CAND", cand, "Candidate rotation file")->required();
  }
  sub("census", "Genus distribution over all rotation systems")
      ->add_option("GRAPH", graph, "graph6 string or file")->required();
  CLI::App* verify = sub("verify", "Exhaustively verify a claim on a graph");
  verify->add_option("CLAIM", claim, "whitney | cubic | cuts")
      ->required()
      ->check(CLI::IsMember({"whitney", "cubic", "cuts"}));
  verify->add_option("GRAPH", graph, "graph6 string or file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  Json j;
  std::ostringstream text;
  int code = kOk;
  try {
    if (name == "faces") code = cmd_faces(file, j, text);
    else if (name == "genus") code = cmd_genus(file, j, text);
    else if (name == "check") code = cmd_check(file, j, text);
    else if (name == "dual") code = cmd_dual(file, j, text);
    else if (name == "compare") code = cmd_compare(ref, cand, j, text);
    else if (name == "witness") code = cmd_witness(ref, cand, j, text);
    else if (name == "census") code = cmd_census(graph, opt, j, text);
    else code = cmd_verify(claim, graph, opt, j, text);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    if (opt.json) {
      Json ej;
      ej["command"] = name;
      ej["error"]["code"] = std::string(to_string(e.code()));
      if (const auto* pe = dynamic_cast<const PreconditionError*>(&e)) {
        ej["error"]["reason"] = std::string(to_string(pe->reason()));
      }
      ej["error"]["message"] = e.what();
      out << report::dump(ej);
    }
    return kUsage;
  }
  if (opt.json) {
    out << report::dump(j);
  } else {
    out << text.str();
  }
  return code;
}

}  // namespace rotsys::cli
