#include "ptlattice_cli/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ptlattice/module_theory.hpp"

namespace ptl::cli {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string dims_text(const std::vector<std::size_t>& d) {
  std::vector<std::string> parts;
  for (auto x : d) parts.push_back(std::to_string(x));
  return "(" + join(parts, ",") + ")";
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json classify_json(const QuiverFile& file, const BoundQuiverAlgebra& a, const ClassificationReport& r) {
  const Quiver& q = a.quiver();
  Json j;
  j["algebra"] = file.name;
  j["vertices"] = q.vertex_labels();
  Json arrows = Json::array();
  for (const auto& arrow : q.arrows()) {
    arrows.push_back({{"name", arrow.name}, {"source", q.vertex_label(arrow.source)}, {"target", q.vertex_label(arrow.target)}});
  }
  j["arrows"] = arrows;
  j["relations"] = file.relations;
  j["dimension"] = a.dimension();
  j["string_algebra"] = {{"holds", r.string_algebra.holds},
                         {"violated_clause", r.string_algebra.violated_clause},
                         {"detail", r.string_algebra.detail}};
  j["band"] = r.band ? Json(r.band->to_string(q)) : Json(nullptr);
  Json dist = {{"holds", r.distributive.holds}};
  if (r.distributive.witness) {
    const auto& w = *r.distributive.witness;
    std::vector<std::string> names;
    for (std::size_t x : w.arrows) names.push_back(q.arrow(x).name);
    dist["witness"] = {{"kind", w.kind}, {"vertex", q.vertex_label(w.vertex)}, {"arrows", names},
                       {"description", w.description}};
  } else {
    dist["witness"] = nullptr;
  }
  j["distributive"] = dist;
  j["lrd"] = {{"holds", r.lrd.holds}, {"reason", r.lrd.reason}};
  Json comps = Json::array();
  for (const auto& c : r.components) comps.push_back(c.quiver().vertex_labels());
  j["components"] = comps;
  j["lattice_refused"] = r.band.has_value();
  return j;
}

std::string classify_text(const Json& j) {
  std::ostringstream o;
  o << "algebra: " << j["algebra"].get<std::string>() << " (dimension " << j["dimension"].get<std::size_t>() << ")\n";
  o << "string algebra: " << (j["string_algebra"]["holds"].get<bool>() ? "yes" : "no");
  if (!j["string_algebra"]["holds"].get<bool>()) {
    o << " (clause " << j["string_algebra"]["violated_clause"].get<std::string>() << ": "
      << j["string_algebra"]["detail"].get<std::string>() << ")";
  }
  o << "\n";
  o << "band: " << (j["band"].is_null() ? std::string("none") : j["band"].get<std::string>()) << "\n";
  o << "distributive: " << (j["distributive"]["holds"].get<bool>() ? "true" : "false");
  if (!j["distributive"]["witness"].is_null()) {
    o << " (witness " << j["distributive"]["witness"]["kind"].get<std::string>() << ": "
      << j["distributive"]["witness"]["description"].get<std::string>() << ")";
  }
  o << "\n";
  o << "lrd: " << (j["lrd"]["holds"].get<bool>() ? "true" : "false");
  if (!j["lrd"]["holds"].get<bool>()) o << " (" << j["lrd"]["reason"].get<std::string>() << ")";
  o << "\n";
  o << "components: " << j["components"].size() << "\n";
  if (j["lattice_refused"].get<bool>()) o << "lattice construction refused: representation-infinite\n";
  return o.str();
}

Json catalog_json(const IndecCatalog& c) {
  Json j;
  j["method"] = c.method() == CatalogMethod::Strings ? "strings" : "brute_force";
  j["field"] = c.field().name();
  Json rows = Json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Representation& m = c[i];
    Json row;
    row["index"] = i;
    row["label"] = c.label(i);
    row["dims"] = m.dims();
    row["string"] = c.strings().empty() ? Json(nullptr) : Json(c.strings()[i].to_string(c.algebra().quiver()));
    row["brick"] = is_brick(m);
    row["tau_rigid"] = is_tau_rigid(m);
    row["unique_max"] = radical_top(m).unique_max;
    rows.push_back(row);
  }
  j["modules"] = rows;
  return j;
}

std::string catalog_text(const Json& j) {
  std::ostringstream o;
  o << "method: " << j["method"].get<std::string>() << ", field " << j["field"].get<std::string>() << "\n";
  o << "idx  label                dims         brick  tau-rigid  unique-max  string\n";
  for (const auto& row : j["modules"]) {
    std::string label = row["label"].get<std::string>();
    std::string dims = dims_text(row["dims"].get<std::vector<std::size_t>>());
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-4zu %-20s %-12s %-6s %-10s %-11s %s\n", row["index"].get<std::size_t>(),
                  label.c_str(), dims.c_str(), row["brick"].get<bool>() ? "yes" : "no",
                  row["tau_rigid"].get<bool>() ? "yes" : "no", row["unique_max"].get<bool>() ? "yes" : "no",
                  row["string"].is_null() ? "-" : row["string"].get<std::string>().c_str());
    o << buf;
  }
  return o.str();
}

Json lattice_json(const std::string& algebra_name, const LatticeView& v) {
  const FiniteLattice& l = *v.lattice;
  const JoinIrreducibles ji = join_irreducibles(l);
  const auto dist = is_distributive(l);
  const auto sd = is_semidistributive(l);
  Json j;
  j["algebra"] = algebra_name;
  j["kind"] = v.kind;
  j["size"] = l.size();
  Json elements = Json::array();
  for (std::size_t i = 0; i < l.size(); ++i) {
    elements.push_back({{"index", i},
                        {"label", l.label(i)},
                        {"members", v.members[i]},
                        {"join_irreducible", std::binary_search(ji.elements.begin(), ji.elements.end(), i)},
                        {"framed", v.framed.empty() ? false : static_cast<bool>(v.framed[i])}});
  }
  j["elements"] = elements;
  Json edges = Json::array();
  for (auto [a, b] : hasse_edges(l)) edges.push_back({a, b});
  j["edges"] = edges;
  j["join_irreducibles"] = ji.elements;
  j["distributive"] = dist.holds;
  j["distributivity_witness"] = dist.witness ? Json(*dist.witness) : Json(nullptr);
  Json kf = Json::array();
  for (const auto& f : sd.meet_failures) kf.push_back({{"element", f.element}, {"set", f.set}});
  Json kj = Json::array();
  for (const auto& f : sd.join_failures) kj.push_back({{"element", f.element}, {"set", f.set}});
  j["semidistributive"] = {{"join", sd.join_semidistributive},
                           {"meet", sd.meet_semidistributive},
                           {"meet_failures", kf},
                           {"join_failures", kj}};
  return j;
}

std::string lattice_text(const Json& j) {
  std::ostringstream o;
  o << j["kind"].get<std::string>() << " lattice of " << j["algebra"].get<std::string>() << ": "
    << j["size"].get<std::size_t>() << " elements, " << j["edges"].size() << " cover relations, "
    << j["join_irreducibles"].size() << " join-irreducible\n";
  o << "distributive: " << (j["distributive"].get<bool>() ? "true" : "false") << "\n";
  o << "semidistributive: join " << (j["semidistributive"]["join"].get<bool>() ? "true" : "false") << ", meet "
    << (j["semidistributive"]["meet"].get<bool>() ? "true" : "false") << "\n";
  for (const auto& f : j["semidistributive"]["meet_failures"]) {
    o << "  no largest y with y ^ j = j_* for j = " << j["elements"][f["element"].get<std::size_t>()]["label"].get<std::string>()
      << "\n";
  }
  for (const auto& e : j["elements"]) {
    o << (e["join_irreducible"].get<bool>() ? "* " : "  ") << (e["framed"].get<bool>() ? "[" : " ")
      << e["label"].get<std::string>() << (e["framed"].get<bool>() ? "]" : "") << "\n";
  }
  o << "(* join-irreducible, [ ] classic class)\n";
  return o.str();
}

std::string lattice_dot(const std::string& algebra_name, const LatticeView& v) {
  const FiniteLattice& l = *v.lattice;
  const JoinIrreducibles ji = join_irreducibles(l);
  std::ostringstream o;
  o << "graph " << quote(algebra_name + " " + v.kind) << " {\n";
  o << "  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < l.size(); ++i) {
    o << "  n" << i << " [label=" << quote(l.label(i));
    if (std::binary_search(ji.elements.begin(), ji.elements.end(), i)) o << ", color=red, fontcolor=red";
    if (!v.framed.empty() && v.framed[i]) o << ", style=dotted";
    o << "];\n";
  }
  std::map<std::size_t, std::vector<std::size_t>> ranks;
  for (std::size_t i = 0; i < l.size(); ++i) ranks[v.rank[i]].push_back(i);
  for (const auto& [r, nodes] : ranks) {
    o << "  { rank=same;";
    for (auto n : nodes) o << " n" << n << ";";
    o << " }\n";
  }
  for (auto [a, b] : hasse_edges(l)) o << "  n" << a << " -- n" << b << ";\n";
  o << "}\n";
  return o.str();
}

Json theories_json(const std::string& algebra_name, const PretorsionContext& ctx,
                   const std::vector<VerifiedPretorsionTheory>& theories, std::size_t pairs_checked, bool audit) {
  Json j;
  j["algebra"] = algebra_name;
  j["count"] = theories.size();
  j["pairs_checked"] = pairs_checked;
  j["audit"] = audit;
  std::map<std::string, std::size_t> groups = {{"full_side", 0}, {"classic", 0}, {"cond1", 0}, {"cond3", 0}, {"full", 0}};
  Json list = Json::array();
  for (const auto& t : theories) {
    ++groups[group_name(t.group)];
    list.push_back({{"torsion", ctx.add_label(t.candidate.torsion)},
                    {"free", ctx.add_label(t.candidate.free)},
                    {"trivial", ctx.add_label(t.candidate.trivial())},
                    {"route", route_name(t.route)},
                    {"group", group_name(t.group)}});
  }
  j["groups"] = groups;
  j["theories"] = list;
  return j;
}

std::string theories_text(const Json& j) {
  std::ostringstream o;
  o << j["count"].get<std::size_t>() << " pretorsion theories for " << j["algebra"].get<std::string>() << " ("
    << j["pairs_checked"].get<std::size_t>() << " pairs checked" << (j["audit"].get<bool>() ? ", audited" : "") << ")\n";
  for (const char* g : {"full_side", "classic", "cond1", "cond3", "full"}) {
    o << "  " << g << ": " << j["groups"][g].get<std::size_t>() << "\n";
  }
  for (const auto& t : j["theories"]) {
    o << "(" << t["torsion"].get<std::string>() << ", " << t["free"].get<std::string>() << ")  Z = "
      << t["trivial"].get<std::string>() << "  [" << t["group"].get<std::string>() << "]\n";
  }
  return o.str();
}

}  // namespace ptl::cli
