#include "rpoly/io.hpp"

#include <charconv>
#include <limits>

#include "rpoly/errors.hpp"

namespace rpoly {

namespace {

using nlohmann::json;

bool is_space(char c) { return c == ' ' || c == '\t'; }

struct Entry {
  int value;
  std::size_t position;
};

// Comma-separated integers; `offset` shifts reported positions into the caller's string.
std::vector<Entry> parse_entries(std::string_view text, std::size_t offset) {
  std::vector<Entry> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && is_space(text[i])) ++i;
  };
  skip();
  if (i == text.size()) return out;
  while (true) {
    skip();
    const char* begin = text.data() + i;
    const char* end = text.data() + text.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) throw ParseError("expected an integer", offset + i);
    out.push_back({value, offset + i});
    i += static_cast<std::size_t>(ptr - begin);
    skip();
    if (i == text.size()) return out;
    if (text[i] != ',') throw ParseError("expected ','", offset + i);
    ++i;
  }
}

std::vector<int> parse_ints(std::string_view text, std::size_t offset) {
  std::vector<int> out;
  for (const auto& entry : parse_entries(text, offset)) out.push_back(entry.value);
  return out;
}

json element_json(const AffineWeylGroup& aff, const AffineElem& w) {
  return format_element(aff, w);
}

AffineElem element_from_json(const AffineWeylGroup& aff, const json& j) {
  return parse_element(j.get<std::string>(), aff);
}

json root_json(const RootSystem& rs, int beta) {
  const RootCoords& c = rs.positive_root(beta).coeffs;
  return std::vector<int>(c.data(), c.data() + c.size());
}

int root_from_json(const RootSystem& rs, const json& j) {
  const auto coeffs = j.get<std::vector<int>>();
  if (static_cast<int>(coeffs.size()) != rs.rank()) throw ParseError("root has wrong rank", 0);
  RootCoords c(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) c(i) = coeffs[i];
  auto id = rs.find(c);
  if (!id || !rs.is_positive(*id)) throw ParseError("not a positive root", 0);
  return *id;
}

}  // namespace

std::vector<int> parse_word(std::string_view text, int rank, std::size_t offset) {
  std::vector<int> word;
  for (const auto& entry : parse_entries(text, offset)) {
    if (entry.value < 1 || entry.value > rank)
      throw ParseError(
          "simple index " + std::to_string(entry.value) + " outside 1.." + std::to_string(rank),
          entry.position);
    word.push_back(entry.value - 1);
  }
  return word;
}

std::string format_word(const std::vector<int>& word) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(word[k] + 1);
  }
  return out;
}

AffineElem parse_element(std::string_view text, const AffineWeylGroup& aff) {
  const int rank = aff.rank();
  const WeylGroup& group = aff.finite();
  if (text.find('=') == std::string_view::npos) {
    const auto word = parse_word(text, rank);
    return aff.from_finite(group.from_word(word));
  }
  AffineElem out = aff.identity();
  bool seen_cl = false, seen_wt = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find(';', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view field = text.substr(start, stop - start);
    std::size_t lead = 0;
    while (lead < field.size() && is_space(field[lead])) ++lead;
    field.remove_prefix(lead);
    const std::size_t at = start + lead;
    if (field.starts_with("cl=")) {
      if (seen_cl) throw ParseError("duplicate cl field", at);
      seen_cl = true;
      out.cl = group.from_word(parse_word(field.substr(3), rank, at + 3));
    } else if (field.starts_with("wt=")) {
      if (seen_wt) throw ParseError("duplicate wt field", at);
      seen_wt = true;
      const auto coords = parse_ints(field.substr(3), at + 3);
      if (static_cast<int>(coords.size()) != rank)
        throw ParseError("wt needs " + std::to_string(rank) + " coordinates", at + 3);
      for (int i = 0; i < rank; ++i) out.wt(i) = coords[i];
    } else if (!field.empty()) {
      throw ParseError("expected 'cl=' or 'wt='", at);
    }
    if (stop == text.size()) break;
    start = stop + 1;
  }
  return out;
}

std::string format_element(const AffineWeylGroup& aff, const AffineElem& w) {
  std::string out = "cl=" + format_word(aff.finite().reduced_word(w.cl)) + ";wt=";
  for (Eigen::Index i = 0; i < w.wt.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(w.wt(i));
  }
  return out;
}

std::string format_weyl(const WeylGroup& group, WeylElem w) {
  const auto& word = group.reduced_word(w);
  if (word.empty()) return "e";
  std::string out;
  for (int i : word) out += "s" + std::to_string(i + 1);
  return out;
}

ReflectionOrder parse_order(std::string_view text, const WeylGroup& group) {
  if (text.empty() || text == "default") return default_reflection_order(group);
  const auto word = parse_word(text, group.rank());
  return ReflectionOrder::from_reduced_word(group, word);
}

json to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) {
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max())
      out.push_back({e, static_cast<std::int64_t>(c)});
    else
      out.push_back({e, c.str()});
  }
  return out;
}

LaurentPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array", 0);
  LaurentPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw ParseError("term must be [exp, coeff]", 0);
    const int e = term[0].get<int>();
    BigInt c = term[1].is_string() ? BigInt(term[1].get<std::string>())
                                   : BigInt(term[1].get<std::int64_t>());
    p.add_term(c, e);
  }
  return p;
}

json to_json(const PeriodicEngine& engine, const SIPath& path) {
  const AffineWeylGroup& aff = engine.affine();
  json edges = json::array();
  for (const auto& e : path.edges) {
    edges.push_back({{"source", element_json(aff, e.source)},
                     {"target", element_json(aff, e.target)},
                     {"label", root_json(engine.roots(), e.label)},
                     {"m", e.m},
                     {"kind", e.kind == EdgeKind::translation ? "translation" : "reflection"},
                     {"d", edge_d(aff, e)}});
  }
  return {{"start", element_json(aff, path.start)},
          {"edges", edges},
          {"deg", path_deg(aff, path)},
          {"length", path.length()}};
}

SIPath sipath_from_json(const PeriodicEngine& engine, const json& j) {
  const AffineWeylGroup& aff = engine.affine();
  SIPath path{element_from_json(aff, j.at("start")), {}};
  for (const auto& e : j.at("edges")) {
    const std::string kind = e.at("kind").get<std::string>();
    if (kind != "translation" && kind != "reflection") throw ParseError("unknown edge kind", 0);
    path.edges.push_back({element_from_json(aff, e.at("source")),
                          element_from_json(aff, e.at("target")),
                          root_from_json(engine.roots(), e.at("label")), e.at("m").get<int>(),
                          kind == "translation" ? EdgeKind::translation : EdgeKind::reflection});
  }
  return path;
}

json to_json(const PeriodicEngine& engine, const DBPath& path) {
  const WeylGroup& group = engine.finite();
  json vertices = json::array();
  for (const auto v : path.vertices) vertices.push_back(format_word(group.reduced_word(v)));
  json edges = json::array();
  for (const auto& e : path.edges)
    edges.push_back({{"label", root_json(engine.roots(), e.label)},
                     {"d", e.d},
                     {"kind", e.quantum ? "quantum" : "bruhat"}});
  return {{"vertices", vertices},
          {"edges", edges},
          {"deg", dbp_deg(path)},
          {"length_prime", dbp_len_prime(path)}};
}

DBPath dbpath_from_json(const PeriodicEngine& engine, const json& j) {
  const WeylGroup& group = engine.finite();
  DBPath path;
  path.quantum_sum = zero_vector(group.rank());
  for (const auto& v : j.at("vertices"))
    path.vertices.push_back(group.from_word(parse_word(v.get<std::string>(), group.rank())));
  const auto& edges = j.at("edges");
  if (path.vertices.size() != edges.size() + 1) throw ParseError("vertex/edge count mismatch", 0);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const int beta = root_from_json(engine.roots(), edges[k].at("label"));
    const DBGEdge e = dbg_edge(group, path.vertices[k], beta);
    if (e.target != path.vertices[k + 1]) throw ParseError("edge target mismatch", 0);
    if (e.quantum) path.quantum_sum += engine.roots().coroot(beta);
    path.edges.push_back(e);
  }
  return path;
}

std::string dbg_to_dot(const WeylGroup& group, const std::vector<DBGEdge>& edges) {
  const RootSystem& rs = group.roots();
  std::string out = "digraph DBG {\n";
  for (const auto w : group.elements()) out += "  \"" + format_weyl(group, w) + "\";\n";
  for (const auto& e : edges) {
    out += "  \"" + format_weyl(group, e.source) + "\" -> \"" + format_weyl(group, e.target) +
           "\" [label=\"" + root_name(rs, e.label) + " (" + std::to_string(e.d) + ")\"";
    if (e.quantum) out += ", style=dashed";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

json dbg_to_json(const WeylGroup& group, const std::vector<DBGEdge>& edges) {
  json vertices = json::array();
  for (const auto w : group.elements()) vertices.push_back(format_weyl(group, w));
  json list = json::array();
  for (const auto& e : edges)
    list.push_back({{"source", format_weyl(group, e.source)},
                    {"target", format_weyl(group, e.target)},
                    {"label", root_json(group.roots(), e.label)},
                    {"d", e.d},
                    {"kind", e.quantum ? "quantum" : "bruhat"}});
  return {{"vertices", vertices}, {"edges", list}};
}

std::string describe(const PeriodicEngine& engine, const SIPath& path) {
  const AffineWeylGroup& aff = engine.affine();
  std::string out = format_element(aff, path.start);
  for (const auto& e : path.edges) {
    out += " --(" + std::to_string(e.m) + ", " + root_name(engine.roots(), e.label) +
           (e.kind == EdgeKind::translation ? ", t" : ", r") + ")--> " +
           format_element(aff, e.target);
  }
  return out;
}

std::string describe(const PeriodicEngine& engine, const DBPath& path) {
  const WeylGroup& group = engine.finite();
  std::string out = format_weyl(group, path.vertices.front());
  for (const auto& e : path.edges) {
    out += (e.quantum ? " ..(" : " --(") + root_name(engine.roots(), e.label) + ", " +
           std::to_string(e.d) + ")" + (e.quantum ? ".> " : "-> ") + format_weyl(group, e.target);
  }
  return out;
}

}  // namespace rpoly
