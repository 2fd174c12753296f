#pragma once

// JSON documents read and written by the command-line front end. Ring
// elements travel as text and are parsed by the ring chosen at run time.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "krullkit/certificates.hpp"
#include "krullkit/entailment.hpp"
#include "krullkit/krull.hpp"
#include "krullkit/lattice.hpp"
#include "krullkit/limits.hpp"

namespace krullkit {

/// A lattice file: {"poset": {"size": n, "covers": [[i, j], ...]}} or
/// {"elements": [names], "meet": [[...]], "join": [[...]]} with table entries
/// given as indices or names.
struct LatticeDocument {
  FiniteDistLattice lattice;
  /// For raw tables: input names and their images. Empty for poset files.
  std::vector<std::string> names;
  std::vector<Elem> image;

  /// A raw name, or a hex element name such as "0x3".
  Elem resolve(std::string_view name) const;
  /// The raw name when there is one, else the hex name.
  std::string display(Elem e) const;
};

LatticeDocument read_lattice(std::string_view json, const Limits& limits = default_limits());
std::string write_lattice(const FiniteDistLattice& lattice);

/// {"levels": l, "U": [[...], ...], "J": [[...], ...]}; a missing U or J
/// means empty at every level.
KrQuery read_query(std::string_view json, const LatticeDocument& doc);

/// {"generators": [...], "axioms": [{"lhs": [...], "rhs": [...]}]}.
EntailmentAxioms read_axioms(std::string_view json);

struct CertificateText {
  std::vector<unsigned> m;
  std::vector<std::string> a;
};

/// {"m": [...], "a": ["<poly>", ...]}.
std::string write_certificate(const CertificateText& cert);
CertificateText read_certificate(std::string_view json);

struct ChainText {
  std::vector<std::vector<std::string>> j;
  std::vector<std::vector<std::string>> u;
};

struct Form1Text {
  std::vector<std::vector<unsigned>> u;
  std::vector<std::vector<std::string>> j;
};

struct Form3LineText {
  std::vector<unsigned> u;
  unsigned next = 0;
  std::vector<std::string> j;
  std::string prev = "0";
};

struct Form3Text {
  std::vector<std::string> x;
  std::vector<Form3LineText> lines;
};

/// {"ring": "...", "chain": [{"J": [...], "U": [...]}, ...], "form": 1,
///  "u": [[...]], "j": [[...]]} or with "form": 3,
///  "x": [...], "lines": [{"u": [...], "next": k, "j": [...], "prev": "..."}].
struct ChainDocument {
  std::string ring;
  ChainText chain;
  std::variant<Form1Text, Form3Text> data;
};

ChainDocument read_chain_document(std::string_view json);
std::string write_chain_document(const ChainDocument& doc);

// ---------------------------------------------------------------------------
// Text <-> ring conversions

template <CommutativeRing R>
std::vector<typename R::Element> parse_elements(const R& ring, const std::vector<std::string>& texts) {
  std::vector<typename R::Element> out;
  for (const auto& t : texts) out.push_back(ring.parse(t));
  return out;
}

template <CommutativeRing R>
std::vector<std::string> format_elements(const R& ring, const std::vector<typename R::Element>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(ring.to_string(x));
  return out;
}

template <CommutativeRing R>
RingChain<typename R::Element> parse_chain(const R& ring, const ChainText& text) {
  RingChain<typename R::Element> chain;
  if (text.j.size() != text.u.size()) throw InvalidInput("chain levels need both J and U");
  for (const auto& level : text.j) chain.j.push_back(parse_elements(ring, level));
  for (const auto& level : text.u) chain.u.push_back(parse_elements(ring, level));
  return chain;
}

template <CommutativeRing R>
ChainText format_chain(const R& ring, const RingChain<typename R::Element>& chain) {
  ChainText text;
  for (const auto& level : chain.j) text.j.push_back(format_elements(ring, level));
  for (const auto& level : chain.u) text.u.push_back(format_elements(ring, level));
  return text;
}

template <CommutativeRing R>
CollapseForm1<typename R::Element> parse_form1(const R& ring, const ChainText& chain, const Form1Text& text) {
  CollapseForm1<typename R::Element> d;
  d.chain = parse_chain(ring, chain);
  d.u_exponents = text.u;
  for (const auto& level : text.j) d.j_cofactors.push_back(parse_elements(ring, level));
  return d;
}

template <CommutativeRing R>
Form1Text format_form1(const R& ring, const CollapseForm1<typename R::Element>& d) {
  Form1Text text;
  text.u = d.u_exponents;
  for (const auto& level : d.j_cofactors) text.j.push_back(format_elements(ring, level));
  return text;
}

template <CommutativeRing R>
CollapseForm3<typename R::Element> parse_form3(const R& ring, const ChainText& chain, const Form3Text& text) {
  CollapseForm3<typename R::Element> d;
  d.chain = parse_chain(ring, chain);
  d.xs = parse_elements(ring, text.x);
  for (const auto& line : text.lines) {
    d.lines.push_back({line.u, line.next, parse_elements(ring, line.j), ring.parse(line.prev)});
  }
  return d;
}

template <CommutativeRing R>
Form3Text format_form3(const R& ring, const CollapseForm3<typename R::Element>& d) {
  Form3Text text;
  text.x = format_elements(ring, d.xs);
  for (const auto& line : d.lines) {
    text.lines.push_back({line.u_exponents, line.next_exponent, format_elements(ring, line.j_cofactors),
                          ring.to_string(line.prev_cofactor)});
  }
  return text;
}

template <CommutativeRing R>
CertificateText format_certificate(const R& ring, const SingularityCertificate<typename R::Element>& cert) {
  return {cert.m, format_elements(ring, cert.a)};
}

template <CommutativeRing R>
SingularityCertificate<typename R::Element> parse_certificate(const R& ring, const CertificateText& text) {
  return {text.m, parse_elements(ring, text.a)};
}

}  // namespace krullkit
