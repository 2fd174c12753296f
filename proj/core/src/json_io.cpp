#include "krullkit/json_io.hpp"

#include <algorithm>
#include <charconv>

#include "json.hpp"

namespace krullkit {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::size_t as_index(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw InvalidInput(std::string(what) + " must be a non-negative integer");
  return v.get<std::size_t>();
}

std::string as_text(const json& v, const char* what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw InvalidInput(std::string(what) + " must be a string");
}

std::vector<std::string> text_list(const json& v, const char* what) {
  if (!v.is_array()) throw InvalidInput(std::string(what) + " must be a list");
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(as_text(x, what));
  return out;
}

std::vector<unsigned> exponent_list(const json& v, const char* what) {
  if (!v.is_array()) throw InvalidInput(std::string(what) + " must be a list");
  std::vector<unsigned> out;
  for (const auto& x : v) {
    const std::size_t e = as_index(x, what);
    if (e > 0xffffffffu) throw InvalidInput(std::string(what) + " out of range");
    out.push_back(static_cast<unsigned>(e));
  }
  return out;
}

std::vector<std::vector<std::string>> text_table(const json& v, const char* what) {
  if (!v.is_array()) throw InvalidInput(std::string(what) + " must be a list of lists");
  std::vector<std::vector<std::string>> out;
  for (const auto& row : v) out.push_back(text_list(row, what));
  return out;
}

std::vector<std::vector<std::size_t>> op_table(const json& v, const std::vector<std::string>& names, const char* what) {
  const std::size_t n = names.size();
  if (!v.is_array() || v.size() != n) throw InvalidInput(std::string(what) + " table must be " + std::to_string(n) + " rows");
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t a = 0; a < n; ++a) {
    const json& row = v[a];
    if (!row.is_array() || row.size() != n) throw InvalidInput(std::string(what) + " table rows must have " + std::to_string(n) + " entries");
    for (const auto& entry : row) {
      std::size_t idx = n;
      if (entry.is_number_integer()) {
        idx = as_index(entry, what);
      } else if (entry.is_string()) {
        const auto it = std::find(names.begin(), names.end(), entry.get<std::string>());
        idx = static_cast<std::size_t>(it - names.begin());
      }
      if (idx >= n) throw InvalidInput(std::string(what) + " table entry " + entry.dump() + " names no element");
      out[a].push_back(idx);
    }
  }
  return out;
}

}  // namespace

Elem LatticeDocument::resolve(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return image[i];
  }
  return lattice.parse_name(name);
}

std::string LatticeDocument::display(Elem e) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (image[i] == e) return names[i];
  }
  return FiniteDistLattice::name(e);
}

LatticeDocument read_lattice(std::string_view text, const Limits& limits) {
  const json doc = parse_json(text);
  if (doc.is_object() && doc.contains("poset")) {
    const json& poset = doc.at("poset");
    const std::size_t size = as_index(field(poset, "size"), "poset size");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> covers;
    if (poset.contains("covers")) {
      const json& cs = poset.at("covers");
      if (!cs.is_array()) throw InvalidInput("covers must be a list of pairs");
      for (const auto& c : cs) {
        if (!c.is_array() || c.size() != 2) throw InvalidInput("each cover must be a pair [lower, upper]");
        covers.emplace_back(static_cast<std::uint32_t>(as_index(c[0], "cover index")),
                            static_cast<std::uint32_t>(as_index(c[1], "cover index")));
      }
    }
    return {FiniteDistLattice::from_poset(Poset::from_covers(size, covers), limits), {}, {}};
  }
  if (doc.is_object() && doc.contains("elements")) {
    std::vector<std::string> names = text_list(doc.at("elements"), "element name");
    for (std::size_t a = 0; a < names.size(); ++a) {
      for (std::size_t b = a + 1; b < names.size(); ++b) {
        if (names[a] == names[b]) throw InvalidInput("duplicate element name '" + names[a] + "'");
      }
    }
    if (names.empty()) throw InvalidInput("a lattice needs at least one element");
    const auto meet = op_table(field(doc, "meet"), names, "meet");
    const auto join = op_table(field(doc, "join"), names, "join");
    ImportedLattice imported = validate_raw_lattice(meet, join, limits);
    return {std::move(imported.lattice), std::move(names), std::move(imported.image)};
  }
  throw InvalidInput("lattice file needs either a 'poset' or an 'elements' field");
}

std::string write_lattice(const FiniteDistLattice& lattice) {
  json covers = json::array();
  for (const auto& [lo, hi] : lattice.poset().covers()) covers.push_back({lo, hi});
  json doc = {{"poset", {{"size", lattice.poset().size()}, {"covers", covers}}}};
  return doc.dump();
}

KrQuery read_query(std::string_view text, const LatticeDocument& lattice) {
  const json doc = parse_json(text);
  const std::size_t levels = as_index(field(doc, "levels"), "levels");
  KrQuery q = KrQuery::empty(levels);
  auto fill = [&](const char* key, std::vector<std::vector<Elem>>& target) {
    if (!doc.contains(key)) return;
    const auto table = text_table(doc.at(key), key);
    if (table.size() != levels + 1) {
      throw InvalidInput(std::string(key) + " must list " + std::to_string(levels + 1) + " levels");
    }
    for (std::size_t i = 0; i <= levels; ++i) {
      for (const auto& name : table[i]) target[i].push_back(lattice.resolve(name));
    }
  };
  fill("U", q.u);
  fill("J", q.j);
  return q;
}

EntailmentAxioms read_axioms(std::string_view text) {
  const json doc = parse_json(text);
  EntailmentAxioms ax;
  ax.generators = GeneratorSet(text_list(field(doc, "generators"), "generator"));
  if (doc.contains("axioms")) {
    const json& list = doc.at("axioms");
    if (!list.is_array()) throw InvalidInput("axioms must be a list");
    for (const auto& a : list) {
      const auto lhs = a.contains("lhs") ? text_list(a.at("lhs"), "lhs") : std::vector<std::string>{};
      const auto rhs = a.contains("rhs") ? text_list(a.at("rhs"), "rhs") : std::vector<std::string>{};
      ax.axioms.push_back({ax.generators.subset(lhs), ax.generators.subset(rhs)});
    }
  }
  return ax;
}

std::string write_certificate(const CertificateText& cert) {
  json doc = {{"m", cert.m}, {"a", cert.a}};
  return doc.dump();
}

CertificateText read_certificate(std::string_view text) {
  const json doc = parse_json(text);
  CertificateText cert{exponent_list(field(doc, "m"), "m"), text_list(field(doc, "a"), "a")};
  if (cert.m.size() != cert.a.size()) throw InvalidInput("certificate needs as many exponents as coefficients");
  return cert;
}

ChainDocument read_chain_document(std::string_view text) {
  const json doc = parse_json(text);
  ChainDocument out;
  out.ring = as_text(field(doc, "ring"), "ring");
  const json& chain = field(doc, "chain");
  if (!chain.is_array() || chain.empty()) throw InvalidInput("chain must be a non-empty list of levels");
  for (const auto& level : chain) {
    out.chain.j.push_back(level.contains("J") ? text_list(level.at("J"), "J") : std::vector<std::string>{});
    out.chain.u.push_back(level.contains("U") ? text_list(level.at("U"), "U") : std::vector<std::string>{});
  }
  const std::size_t form = as_index(field(doc, "form"), "form");
  if (form == 1) {
    Form1Text f;
    const json& u = field(doc, "u");
    if (!u.is_array()) throw InvalidInput("u must be a list of exponent lists");
    for (const auto& row : u) f.u.push_back(exponent_list(row, "u"));
    f.j = text_table(field(doc, "j"), "j");
    out.data = std::move(f);
  } else if (form == 3) {
    Form3Text f;
    f.x = text_list(field(doc, "x"), "x");
    const json& lines = field(doc, "lines");
    if (!lines.is_array()) throw InvalidInput("lines must be a list");
    for (const auto& line : lines) {
      Form3LineText l;
      l.u = exponent_list(field(line, "u"), "u");
      l.next = static_cast<unsigned>(as_index(field(line, "next"), "next"));
      l.j = text_list(field(line, "j"), "j");
      l.prev = as_text(field(line, "prev"), "prev");
      f.lines.push_back(std::move(l));
    }
    out.data = std::move(f);
  } else {
    throw InvalidInput("form must be 1 or 3");
  }
  return out;
}

std::string write_chain_document(const ChainDocument& doc) {
  json chain = json::array();
  for (std::size_t i = 0; i < doc.chain.j.size(); ++i) chain.push_back({{"J", doc.chain.j[i]}, {"U", doc.chain.u[i]}});
  json out = {{"ring", doc.ring}, {"chain", chain}};
  if (const auto* f1 = std::get_if<Form1Text>(&doc.data)) {
    out["form"] = 1;
    out["u"] = f1->u;
    out["j"] = f1->j;
  } else {
    const auto& f3 = std::get<Form3Text>(doc.data);
    out["form"] = 3;
    out["x"] = f3.x;
    json lines = json::array();
    for (const auto& l : f3.lines) lines.push_back({{"u", l.u}, {"next", l.next}, {"j", l.j}, {"prev", l.prev}});
    out["lines"] = lines;
  }
  return out.dump();
}

}  // namespace krullkit
