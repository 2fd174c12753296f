#include "krullkit_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "krullkit/certificates.hpp"
#include "krullkit/errors.hpp"
#include "krullkit/json_io.hpp"
#include "krullkit/krull.hpp"
#include "krullkit/ring.hpp"
#include "krullkit/zariski.hpp"

namespace krullkit::cli {

namespace {

using nlohmann::json;

struct Outcome {
  int code = kTrue;
  json payload;
  std::string summary;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Comma-separated list; blank input is the empty list.
std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  bool any = false;
  for (char c : text) {
    if (c == ',') {
      out.push_back(item);
      item.clear();
    } else {
      item += c;
      if (!std::isspace(static_cast<unsigned char>(c))) any = true;
    }
  }
  if (!any && out.empty()) return {};
  out.push_back(item);
  for (const auto& s : out) {
    if (s.find_first_not_of(" \t\r\n") == std::string::npos) throw InvalidInput("empty entry in list '" + text + "'");
  }
  return out;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string s = "(";
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + names[i];
  return s + ")";
}

std::vector<std::string> display_all(const LatticeDocument& doc, const std::vector<Elem>& xs) {
  std::vector<std::string> out;
  for (Elem e : xs) out.push_back(doc.display(e));
  return out;
}

// --- dim-lattice -------------------------------------------------------------

struct DimArgs {
  std::string lattice;
  std::optional<int> leq;
  bool verbose = false;
};

Outcome dim_lattice(const DimArgs& args, const Limits& limits) {
  const LatticeDocument doc = read_lattice(read_file(args.lattice), limits);
  const FiniteDistLattice& L = doc.lattice;
  Outcome r;
  if (!args.leq) {
    const int d = lattice_dimension(L, limits);
    r.payload = {{"status", "holds"}, {"dimension", d}};
    r.summary = "dimension = " + std::to_string(d);
    if (args.verbose && d >= 0) {
      const DimCheck check = lattice_dim_leq(L, d, {.over_generators = true, .record_witnesses = true}, limits);
      json rows = json::array();
      for (const auto& w : check.witnesses) {
        if (!verify_dim_witness(L, w)) throw VerificationFailure("dimension witness does not verify");
        rows.push_back({{"x", display_all(doc, w.xs)}, {"a", display_all(doc, w.as)}});
        r.summary += "\n  x = " + join_names(display_all(doc, w.xs)) + "  a = " + join_names(display_all(doc, w.as));
      }
      r.payload["witnesses"] = rows;
    }
    return r;
  }
  const int d = *args.leq;
  const DimCheck check = lattice_dim_leq(L, d, {.over_generators = true, .record_witnesses = args.verbose}, limits);
  r.code = check.holds ? kTrue : kFalse;
  r.payload = {{"status", check.holds ? "holds" : "fails"}, {"bound", d}};
  r.summary = "dim <= " + std::to_string(d) + ": " + (check.holds ? "holds" : "fails");
  if (check.counterexample) {
    const auto names = display_all(doc, *check.counterexample);
    r.payload["counterexample"] = names;
    r.summary += "\n  no witness for x = " + join_names(names);
  }
  if (args.verbose) {
    json rows = json::array();
    for (const auto& w : check.witnesses) {
      if (!verify_dim_witness(L, w)) throw VerificationFailure("dimension witness does not verify");
      rows.push_back({{"x", display_all(doc, w.xs)}, {"a", display_all(doc, w.as)}});
      r.summary += "\n  x = " + join_names(display_all(doc, w.xs)) + "  a = " + join_names(display_all(doc, w.as));
    }
    r.payload["witnesses"] = rows;
  }
  return r;
}

// --- kr-entails --------------------------------------------------------------

struct KrArgs {
  std::string lattice;
  std::string query;
  std::string method = "both";
  unsigned workers = 1;
};

Outcome kr_entails_cmd(const KrArgs& args, const Limits& limits) {
  const LatticeDocument doc = read_lattice(read_file(args.lattice), limits);
  const KrQuery q = read_query(read_file(args.query), doc);
  validate_query(doc.lattice, q);

  std::optional<bool> verdict;
  std::optional<ChainWitness> witness;
  if (args.method == "witness" || args.method == "both") {
    witness = kr_entails(doc.lattice, q, limits, {.workers = args.workers});
    verdict = witness.has_value();
  }
  if (args.method == "heyting" || args.method == "both") {
    const bool h = kr_entails_heyting(doc.lattice, q);
    if (verdict && *verdict != h) throw VerificationFailure("witness search and Heyting evaluation disagree");
    verdict = h;
    if (h && !witness) witness = heyting_witness(doc.lattice, q);
  }
  if (witness && !verify_witness(doc.lattice, q, *witness)) throw VerificationFailure("witness does not verify");

  Outcome r;
  r.code = *verdict ? kTrue : kFalse;
  r.payload = {{"status", *verdict ? "holds" : "fails"}, {"levels", q.levels}};
  r.summary = *verdict ? "holds" : "fails";
  if (witness) {
    const auto names = display_all(doc, witness->xs);
    r.payload["witness"] = names;
    if (!names.empty()) r.summary += "\n  witness x = " + join_names(names);
  }
  return r;
}

// --- ring-singular -----------------------------------------------------------

struct SingularArgs {
  std::string ring;
  std::string seq;
  unsigned max_exponent = SearchBounds{}.max_exponent;
  bool escalate = false;
  unsigned hard_cap = SearchBounds{}.hard_cap;
};

template <CommutativeRing R>
Outcome singular_in(const R& ring, const SingularArgs& args, const Limits& limits) {
  using E = typename R::Element;
  const std::vector<E> xs = parse_elements(ring, split_list(args.seq));
  const std::span<const E> seq(xs);
  std::optional<SingularityCertificate<E>> cert;
  if constexpr (std::is_same_v<R, PolynomialRing>) {
    if (ring.nvars() > 0 && !xs.empty()) {
      if (auto q = algebraic_dependence(ring, seq)) cert = certificate_from_dependence(ring, *q, seq);
    }
  }
  if (!cert) {
    SearchBounds bounds;
    bounds.max_exponent = args.max_exponent;
    bounds.escalate = args.escalate;
    bounds.hard_cap = std::max(args.hard_cap, args.max_exponent);
    cert = search_certificate(ring, seq, bounds, limits);
  }
  Outcome r;
  if (!cert) {
    r.code = kUnknown;
    r.payload = {{"status", "bounded-unknown"}};
    r.summary = "bounded-unknown: no certificate with exponents <= " +
                std::to_string(args.escalate ? std::max(args.hard_cap, args.max_exponent) : args.max_exponent);
    return r;
  }
  if (!verify_certificate(ring, seq, *cert)) throw VerificationFailure("certificate does not verify");
  const CertificateText text = format_certificate(ring, *cert);
  r.payload = {{"status", "holds"}, {"certificate", json::parse(write_certificate(text))}};
  r.summary = "certificate " + write_certificate(text);
  return r;
}

// --- ring-collapse -----------------------------------------------------------

struct CollapseArgs {
  std::string chain;
  int to = 0;
};

template <CommutativeRing R>
Outcome collapse_in(const R& ring, ChainDocument doc, int to) {
  ChainDocument result = doc;
  if (const auto* f1 = std::get_if<Form1Text>(&doc.data)) {
    const auto d = parse_form1(ring, doc.chain, *f1);
    if (to == 3) {
      result.data = format_form3(ring, collapse_1_to_3(ring, d));
    } else if (!verify_form1(ring, d)) {
      throw InvalidInput("form-1 identity does not verify");
    }
  } else {
    const auto d = parse_form3(ring, doc.chain, std::get<Form3Text>(doc.data));
    if (to == 1) {
      result.data = format_form1(ring, collapse_3_to_1(ring, d));
    } else if (!verify_form3(ring, d)) {
      throw InvalidInput("form-3 memberships do not verify");
    }
  }
  // Re-check what is emitted.
  if (const auto* f1 = std::get_if<Form1Text>(&result.data)) {
    if (!verify_form1(ring, parse_form1(ring, result.chain, *f1))) throw VerificationFailure("emitted form 1 does not verify");
  } else if (!verify_form3(ring, parse_form3(ring, result.chain, std::get<Form3Text>(result.data)))) {
    throw VerificationFailure("emitted form 3 does not verify");
  }
  Outcome r;
  r.payload = {{"status", "collapsed"}, {"data", json::parse(write_chain_document(result))}};
  r.summary = "collapsed (form " + std::to_string(result.data.index() == 0 ? 1 : 3) + ")\n" +
              write_chain_document(result);
  return r;
}

// --- zar ---------------------------------------------------------------------

struct ZarArgs {
  std::string op;
  std::string ring;
  std::string a;
  std::string b;
};

template <SaturatingRing R>
Outcome zar_in(const R& ring, const ZarArgs& args) {
  using E = typename R::Element;
  const ZarElem<E> a{parse_elements(ring, split_list(args.a))};
  const ZarElem<E> b{parse_elements(ring, split_list(args.b))};
  Outcome r;
  if (args.op == "leq") {
    const bool holds = zar_leq(ring, a, b);
    r.code = holds ? kTrue : kFalse;
    r.payload = {{"status", holds ? "holds" : "fails"}};
    r.summary = holds ? "holds" : "fails";
    return r;
  }
  ZarElem<E> z;
  if (args.op == "join") {
    z = zar_join(ring, a, b);
  } else if (args.op == "meet") {
    z = zar_meet(ring, a, b);
  } else {
    z = zar_implies(ring, a, b);
    // a ∧ (a → b) ≤ b, and b ≤ a → b.
    if (!zar_leq(ring, zar_meet(ring, a, z), b) || !zar_leq(ring, b, z)) {
      throw VerificationFailure("implication result fails its defining inequalities");
    }
  }
  // Canonical single generators where the ring has them.
  if constexpr (std::is_same_v<R, IntegerRing>) {
    z.gens = {ring.radical_generator(z.gens)};
  } else if constexpr (std::is_same_v<R, PolynomialRing>) {
    if (ring.nvars() == 1) z.gens = {ring.radical_generator(z.gens)};
  }
  std::erase_if(z.gens, [&](const E& g) { return ring.is_zero(g); });
  const auto gens = format_elements(ring, z.gens);
  r.payload = {{"status", "holds"}, {"generators", gens}};
  r.summary = "radical of " + join_names(gens);
  return r;
}

template <class F>
Outcome with_ring(const std::string& selector, const Limits& limits, F&& f) {
  return std::visit([&](const auto& ring) { return f(ring); }, parse_ring_selector(selector, limits));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constructive Krull dimension toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable JSON on stdout");

  DimArgs dim;
  auto* dim_cmd = app.add_subcommand("dim-lattice", "Krull dimension of a finite distributive lattice");
  dim_cmd->add_option("--lattice", dim.lattice, "Lattice JSON file")->required();
  dim_cmd->add_option("--leq", dim.leq, "Only check dim <= d");
  dim_cmd->add_flag("--verbose", dim.verbose, "Print the witness table");
  dim_cmd->add_flag("--json", as_json, "Machine-readable JSON on stdout");

  KrArgs kr;
  auto* kr_cmd = app.add_subcommand("kr-entails", "Decide a Kr_l entailment in a lattice");
  kr_cmd->add_option("--lattice", kr.lattice, "Lattice JSON file")->required();
  kr_cmd->add_option("--query", kr.query, "Query JSON file")->required();
  kr_cmd->add_option("--method", kr.method, "witness, heyting or both")
      ->check(CLI::IsMember({"witness", "heyting", "both"}));
  kr_cmd->add_option("--workers", kr.workers, "Threads for the witness search")->check(CLI::Range(1u, 256u));
  kr_cmd->add_flag("--json", as_json, "Machine-readable JSON on stdout");

  SingularArgs sing;
  auto* sing_cmd = app.add_subcommand("ring-singular", "Find a singularity certificate for a sequence");
  sing_cmd->add_option("--ring", sing.ring, "zz | zmod:<n> | poly:<field>:<nvars>")->required();
  sing_cmd->add_option("--seq", sing.seq, "Comma-separated ring elements")->required();
  sing_cmd->add_option("--max-exp", sing.max_exponent, "Exponent bound for the search");
  sing_cmd->add_flag("--escalate", sing.escalate, "Double the exponent bound up to --hard-cap");
  sing_cmd->add_option("--hard-cap", sing.hard_cap, "Largest exponent bound when escalating");
  sing_cmd->add_flag("--json", as_json, "Machine-readable JSON on stdout");

  CollapseArgs col;
  auto* col_cmd = app.add_subcommand("ring-collapse", "Check or convert a collapse certificate");
  col_cmd->add_option("--chain", col.chain, "Chain JSON file")->required();
  col_cmd->add_option("--to", col.to, "Convert to form 1 or 3")->check(CLI::IsMember({1, 3}));
  col_cmd->add_flag("--json", as_json, "Machine-readable JSON on stdout");

  ZarArgs zar;
  auto* zar_cmd = app.add_subcommand("zar", "Operations in the Zariski lattice of a ring");
  zar_cmd->add_option("--op", zar.op, "leq, join, meet or implies")
      ->required()
      ->check(CLI::IsMember({"leq", "join", "meet", "implies"}));
  zar_cmd->add_option("--ring", zar.ring, "zz | zmod:<n> | poly:<field>:<nvars>")->required();
  zar_cmd->add_option("--a", zar.a, "Generators of the first radical, comma-separated");
  zar_cmd->add_option("--b", zar.b, "Generators of the second radical, comma-separated");
  zar_cmd->add_flag("--json", as_json, "Machine-readable JSON on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kUsage;
  }

  Outcome result;
  try {
    const Limits limits = Limits::from_environment();
    if (*dim_cmd) {
      result = dim_lattice(dim, limits);
    } else if (*kr_cmd) {
      result = kr_entails_cmd(kr, limits);
    } else if (*sing_cmd) {
      result = with_ring(sing.ring, limits, [&](const auto& ring) { return singular_in(ring, sing, limits); });
    } else if (*col_cmd) {
      ChainDocument doc = read_chain_document(read_file(col.chain));
      result = with_ring(doc.ring, limits, [&](const auto& ring) { return collapse_in(ring, doc, col.to); });
    } else {
      result = with_ring(zar.ring, limits, [&](const auto& ring) { return zar_in(ring, zar); });
    }
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const VerificationFailure& e) {
    err << "internal verification failure: " << e.what() << '\n';
    return kInternal;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }

  if (as_json) {
    out << result.payload.dump() << '\n';
  } else {
    out << result.summary << '\n';
  }
  return result.code;
}

}  // namespace krullkit::cli
