#include "codiff/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "codiff/transport.hpp"

namespace codiff {

std::string to_string(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::lie: return "lie";
    case AlgebraKind::assoc: return "assoc";
    case AlgebraKind::linf: return "linf";
    case AlgebraKind::ainf: return "ainf";
  }
  return "?";
}

std::optional<AlgebraKind> parse_kind(const std::string& s) {
  for (auto k : {AlgebraKind::lie, AlgebraKind::assoc, AlgebraKind::linf, AlgebraKind::ainf})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::vector<std::string> tokenize(std::string line) {
  std::string spaced;
  for (char c : line) {
    if (c == ':') spaced += " : ";
    else spaced += c;
  }
  std::istringstream in(spaced);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

struct Parser {
  int line = 0;
  AlgebraInput input;
  std::set<std::string> seen_keys;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, msg); }

  int integer(const std::string& tok, int min) const {
    auto q = parse_rational(tok);
    if (!q || q->get_den() != 1) fail("expected an integer, got '" + tok + "'");
    if (*q < min || *q > 1000000) fail("value " + tok + " out of range");
    return static_cast<int>(q->get_num().get_si());
  }

  // A token that starts like a number must parse as one.
  std::optional<Rational> coefficient(const std::string& tok) const {
    std::size_t k = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (k >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[k]))) return std::nullopt;
    auto q = parse_rational(tok);
    if (!q) fail("malformed coefficient '" + tok + "'");
    return q;
  }

  Parity parity(const std::string& tok) const {
    auto p = parse_parity(tok);
    if (!p) fail("expected even or odd, got '" + tok + "'");
    return *p;
  }

  void once(const std::string& key) {
    if (!seen_keys.insert(key).second) fail("'" + key + "' given twice");
  }

  bool known_basis(const std::string& name) const {
    return std::any_of(input.basis.begin(), input.basis.end(), [&](const BasisElement& b) { return b.name == name; });
  }

  std::optional<std::size_t> parameter_index(const std::string& name) const {
    if (!input.target) return std::nullopt;
    const auto& ps = input.target->parameters;
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (ps[i].name == name) return i;
    return std::nullopt;
  }

  // [sign] [coefficient] name { (+|-) [coefficient] name }, or a lone 0
  Combination combination(const std::vector<std::string>& t, std::size_t from) const {
    Combination out;
    if (from == t.size()) fail("missing right-hand side");
    if (t.size() == from + 1 && t[from] == "0") return out;
    std::size_t i = from;
    Rational sign = 1;
    bool expect_term = true;
    while (i < t.size()) {
      if (!expect_term) {
        if (t[i] == "+") sign = 1;
        else if (t[i] == "-") sign = -1;
        else fail("expected + or - before '" + t[i] + "'");
        ++i;
        expect_term = true;
        continue;
      }
      if (t[i] == "-" && out.empty() && sign == 1) {
        sign = -1;
        ++i;
        continue;
      }
      Rational c = 1;
      if (auto q = coefficient(t[i])) {
        c = *q;
        if (++i == t.size()) fail("coefficient without a basis element");
      }
      if (!known_basis(t[i])) fail("unknown basis element '" + t[i] + "'");
      out.push_back({sign * c, t[i]});
      ++i;
      sign = 1;
      expect_term = false;
    }
    if (expect_term) fail("dangling sign");
    return out;
  }

  Exponents monomial(const std::string& tok) const {
    if (!input.target || input.target->parameters.empty()) fail("monomial '" + tok + "' before any parameter");
    Exponents e(input.target->parameters.size(), 0);
    std::istringstream in(tok);
    for (std::string f; std::getline(in, f, '*');) {
      int power = 1;
      auto caret = f.find('^');
      if (caret != std::string::npos) {
        power = integer(f.substr(caret + 1), 1);
        f = f.substr(0, caret);
      }
      auto k = parameter_index(f);
      if (!k) fail("unknown parameter '" + f + "'");
      e[*k] += power;
    }
    if (degree(e) == 0) fail("empty monomial");
    return e;
  }

  Polynomial polynomial(const std::vector<std::string>& t, std::size_t from) const {
    Polynomial p;
    if (from == t.size()) fail("missing polynomial");
    std::size_t i = from;
    Rational sign = 1;
    bool expect_term = true;
    while (i < t.size()) {
      if (!expect_term) {
        if (t[i] == "+") sign = 1;
        else if (t[i] == "-") sign = -1;
        else fail("expected + or - before '" + t[i] + "'");
        ++i;
        expect_term = true;
        continue;
      }
      Rational c = 1;
      std::string tok = t[i];
      if (auto q = coefficient(tok)) {
        c = *q;
        if (++i == t.size()) fail("coefficient without a monomial");
        tok = t[i];
      } else if (tok.size() > 1 && tok[0] == '-') {
        c = -1;
        tok = tok.substr(1);
      }
      p[monomial(tok)] += sign * c;
      ++i;
      sign = 1;
      expect_term = false;
    }
    if (expect_term) fail("dangling sign");
    for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
    return p;
  }

  // k : names... -> combination, starting at t[from]
  PartInput part(const std::vector<std::string>& t, std::size_t from) const {
    if (from + 1 >= t.size() || t[from + 1] != ":") fail("expected '<arity>:' after part");
    PartInput p;
    p.arity = integer(t[from], 1);
    std::size_t i = from + 2;
    for (; i < t.size() && t[i] != "->"; ++i) {
      if (!known_basis(t[i])) fail("unknown basis element '" + t[i] + "'");
      p.inputs.push_back(t[i]);
    }
    if (i == t.size()) fail("expected '->'");
    if (static_cast<int>(p.inputs.size()) != p.arity)
      fail("part of arity " + std::to_string(p.arity) + " has " + std::to_string(p.inputs.size()) + " inputs");
    p.output = combination(t, i + 1);
    return p;
  }

  TargetInput& target() {
    if (!input.target) input.target.emplace();
    return *input.target;
  }

  void line_of(const std::vector<std::string>& t) {
    const std::string& key = t[0];
    auto need = [&](std::size_t n) {
      if (t.size() != n) fail("'" + key + "' expects " + std::to_string(n - 1) + " argument(s)");
    };
    if (key == "kind") {
      need(2);
      once(key);
      auto k = parse_kind(t[1]);
      if (!k) fail("unknown kind '" + t[1] + "' (lie, assoc, linf, ainf)");
      input.kind = *k;
    } else if (key == "basis") {
      need(3);
      if (!is_identifier(t[1])) fail("bad basis name '" + t[1] + "'");
      if (known_basis(t[1])) fail("basis element '" + t[1] + "' declared twice");
      if (!input.parts.empty()) fail("basis declared after a part");
      input.basis.push_back({t[1], parity(t[2])});
    } else if (key == "weight_cap") {
      need(2);
      once(key);
      input.weight_cap = integer(t[1], 1);
    } else if (key == "order") {
      need(2);
      once(key);
      input.order = integer(t[1], 1);
    } else if (key == "part") {
      PartInput p = part(t, 1);
      bool strict_kind = input.kind == AlgebraKind::lie || input.kind == AlgebraKind::assoc;
      if (strict_kind && p.arity != 2) fail(to_string(input.kind) + " inputs allow only arity 2");
      input.parts.push_back(std::move(p));
    } else if (key == "parameter") {
      if (t.size() != 3 && t.size() != 5) fail("'parameter' expects: name parity [order k]");
      if (!is_identifier(t[1])) fail("bad parameter name '" + t[1] + "'");
      if (parameter_index(t[1])) fail("parameter '" + t[1] + "' declared twice");
      if (input.target && (!input.target->relations.empty() || !input.target->terms.empty()))
        fail("parameter declared after relations or terms");
      int ord = 1;
      if (t.size() == 5) {
        if (t[3] != "order") fail("expected 'order'");
        ord = integer(t[4], 1);
      }
      target().parameters.push_back({t[1], parity(t[2]), ord});
    } else if (key == "truncate") {
      need(2);
      once(key);
      target().truncation = integer(t[1], 2);
    } else if (key == "relation") {
      Polynomial p = polynomial(t, 1);
      target().relations.push_back(std::move(p));
    } else if (key == "deform") {
      if (t.size() < 3 || t[2] != "part") fail("expected 'deform <monomial> part <arity>: ...'");
      Exponents e = monomial(t[1]);
      target().terms.push_back({e, part(t, 3)});
    } else {
      fail("unknown keyword '" + key + "'");
    }
  }
};

std::string render_combination(const Combination& c) {
  if (c.empty()) return "0";
  std::string s;
  for (const auto& [q, name] : c) {
    if (s.empty()) s += q < 0 ? "-" : "";
    else s += q < 0 ? " - " : " + ";
    s += to_string(Rational(abs(q))) + " " + name;
  }
  return s;
}

std::string render_part(const PartInput& p) {
  std::string s = std::to_string(p.arity) + ":";
  for (const auto& n : p.inputs) s += " " + n;
  return s + " -> " + render_combination(p.output);
}

SparseVector combination_vector(const Combination& c, const GradedSpace& space) {
  SparseVector v;
  for (const auto& [q, name] : c) v.add(*space.index_of(name), q);
  return v;
}

std::optional<Parity> homogeneous(const SparseVector& v, const GradedSpace& space) {
  std::optional<Parity> p;
  for (const auto& [i, c] : v) {
    if (p && *p != space.parity(i)) throw std::invalid_argument("output mixes even and odd elements");
    p = space.parity(i);
  }
  return p;
}

std::string part_label(const PartInput& p) {
  std::string s;
  for (const auto& n : p.inputs) s += (s.empty() ? "" : " ") + n;
  return "(" + s + ")";
}

Letters letters_of(const PartInput& p, const GradedSpace& space) {
  Letters l;
  for (const auto& n : p.inputs) l.push_back(*space.index_of(n));
  return l;
}

}  // namespace

AlgebraInput parse_input(const std::string& text) {
  Parser ps;
  std::istringstream in(text);
  for (std::string raw; std::getline(in, raw);) {
    ++ps.line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto t = tokenize(raw);
    if (t.empty()) continue;
    ps.line_of(t);
  }
  if (ps.input.basis.empty()) throw ParseError(ps.line, "no basis declared");
  if (ps.input.target && ps.input.target->parameters.empty()) throw ParseError(ps.line, "target terms without parameters");
  return ps.input;
}

std::string serialize(const AlgebraInput& input) {
  std::ostringstream out;
  out << "kind " << to_string(input.kind) << "\n";
  out << "weight_cap " << input.weight_cap << "\n";
  out << "order " << input.order << "\n";
  for (const auto& b : input.basis) out << "basis " << b.name << " " << to_string(b.parity) << "\n";
  for (const auto& p : input.parts) out << "part " << render_part(p) << "\n";
  if (input.target) {
    const auto& t = *input.target;
    for (const auto& g : t.parameters) {
      out << "parameter " << g.name << " " << to_string(g.parity);
      if (g.order != 1) out << " order " << g.order;
      out << "\n";
    }
    out << "truncate " << t.truncation << "\n";
    for (const auto& r : t.relations) out << "relation " << to_string(r, t.parameters) << "\n";
    for (const auto& [e, p] : t.terms) out << "deform " << monomial_label(e, t.parameters) << " part " << render_part(p) << "\n";
  }
  return out.str();
}

Coderivation build_codifferential(const AlgebraInput& input, int weight_cap) {
  if (weight_cap < 1) throw std::invalid_argument("weight cap must be at least 1");
  GradedSpace v(input.basis);
  if (input.kind == AlgebraKind::lie || input.kind == AlgebraKind::assoc) {
    PairTable table;
    for (const auto& p : input.parts) {
      if (p.arity != 2) throw std::invalid_argument(to_string(input.kind) + " inputs allow only arity 2");
      std::size_t x = *v.index_of(p.inputs[0]), y = *v.index_of(p.inputs[1]);
      SparseVector value = combination_vector(p.output, v);
      auto par = homogeneous(value, v);
      if (par && *par != v.parity(x) + v.parity(y))
        throw std::invalid_argument("value of " + part_label(p) + " has the wrong parity");
      if (table.count({x, y})) throw std::invalid_argument("value of " + part_label(p) + " given twice");
      if (input.kind == AlgebraKind::lie && table.count({y, x})) {
        // [y,x] = -(-1)^{|x||y|} [x,y]
        SparseVector expect = table.at({y, x}).scaled(-sign_of(v.parity(x), v.parity(y)));
        if (!(expect == value)) throw std::invalid_argument("bracket " + part_label(p) + " is not antisymmetric");
        continue;
      }
      table[{x, y}] = value;
    }
    return input.kind == AlgebraKind::lie ? lie_codifferential(v, table, weight_cap) : assoc_codifferential(v, table, weight_cap);
  }
  GradedSpace w = parity_reversion(v);
  auto co = make_coalgebra(w, input.kind == AlgebraKind::linf ? WordKind::symmetric : WordKind::tensor, weight_cap);
  Coderivation d(co, Parity::odd);
  for (const auto& p : input.parts) {
    if (p.arity > weight_cap)
      throw std::invalid_argument("part " + part_label(p) + " has arity above the weight cap " + std::to_string(weight_cap));
    Letters l = letters_of(p, w);
    SparseVector value = combination_vector(p.output, w);
    auto par = homogeneous(value, w);
    if (par && *par != word_parity(l, w) + Parity::odd)
      throw std::invalid_argument("value of " + part_label(p) + " does not give an odd map on W");
    d.add(p.arity, l, value);
  }
  return d;
}

void require_codifferential(const Coderivation& d) {
  auto n = codifferential_defect(d);
  if (!n) return;
  Coderivation sq = bracket(d, d);
  const auto& table = weight_component(sq, *n).table();
  std::string where;
  for (const auto& [letters, value] : table)
    if (!value.empty()) {
      for (std::size_t l : letters) where += (where.empty() ? "" : " ") + d.space().name(l);
      break;
    }
  throw RejectedInput("not a codifferential: [d,d] is nonzero in weight " + std::to_string(*n) + " (on " + where + ")");
}

namespace {

std::shared_ptr<const DeformationProblem> make_problem(const AlgebraInput& input, const RunOptions& o, int cap) {
  Coderivation d = build_codifferential(input, cap);
  require_codifferential(d);
  return std::make_shared<const DeformationProblem>(d, DeformationOptions{o.strict, o.even_parameters});
}

std::shared_ptr<const Deformation> build_target(const AlgebraInput& input, const DeformationProblem& p) {
  const TargetInput& t = *input.target;
  auto base = std::make_shared<const BaseAlgebra>(presented(t.parameters, t.truncation, t.relations));
  const CochainSpace& cs = p.cochains();
  const GradedSpace& w = cs.coalgebra().space();
  Coefficients delta(base->dim());
  for (const auto& [e, part] : t.terms) {
    if (part.arity > cs.coalgebra().weight_cap())
      throw std::invalid_argument("deformation term " + part_label(part) + " has arity above the weight cap");
    Letters l = letters_of(part, w);
    SparseVector value = combination_vector(part.output, w);
    auto par = homogeneous(value, w);
    if (!par) continue;
    Coderivation c(cs.coalgebra_ptr(), *par + word_parity(l, w));
    c.add(part.arity, l, value);
    SparseVector coeff = cs.to_vector(c);
    for (const auto& [k, x] : base->monomial_value(e)) delta[k].add_scaled(coeff, x);
  }
  return std::make_shared<const Deformation>(Deformation{base, delta});
}

}  // namespace

MiniversalReport run(const AlgebraInput& input, const RunOptions& options) {
  MiniversalReport r;
  r.input = input;
  r.options = options;
  r.weight_cap = options.weight_cap.value_or(input.weight_cap);
  r.order = options.order.value_or(input.order);
  if (r.order < 1) throw std::invalid_argument("order must be at least 1");
  r.problem = make_problem(input, options, r.weight_cap);
  r.cohomology = CohomologyReport(r.problem->lie(), r.weight_cap).dims();
  r.miniversal = miniversal(*r.problem, r.order);
  return r;
}

MiniversalReport run_verify(const AlgebraInput& input, const RunOptions& options) {
  if (!input.target) throw std::invalid_argument("verify needs parameter/deform lines describing a deformation");
  RunOptions o = options;
  int depth = input.target->truncation - 1;
  o.order = std::max(options.order.value_or(input.order), depth);
  MiniversalReport r = run(input, o);
  r.target = build_target(input, *r.problem);
  r.verify = verify_versality(*r.problem, r.miniversal, *r.target);
  return r;
}

std::vector<CohomologyDims> cohomology_table(const AlgebraInput& input, const RunOptions& options) {
  int cap = options.weight_cap.value_or(input.weight_cap);
  Coderivation d = build_codifferential(input, cap);
  require_codifferential(d);
  LieStructure lie(d);
  return CohomologyReport(lie, cap).dims();
}

std::string format_element(const BaseAlgebra& a, const SparseVector& x) {
  if (x.empty()) return "0";
  std::string s;
  for (const auto& [i, q] : x) {
    if (s.empty()) s += q < 0 ? "-" : "";
    else s += q < 0 ? " - " : " + ";
    Rational m = abs(q);
    if (m != 1) s += to_string(m) + " ";
    s += a.element(i).label;
  }
  return s;
}

std::vector<std::string> format_cochain(const CochainSpace& cs, const SparseVector& x) {
  std::vector<std::string> out;
  const GradedSpace& w = cs.coalgebra().space();
  // group by (arity, word)
  std::map<std::pair<int, std::size_t>, SparseVector> grouped;
  for (const auto& [i, c] : x) {
    const auto& co = cs.coordinate(i);
    grouped[{co.arity, co.word}].add(co.output, c);
  }
  for (const auto& [key, value] : grouped) {
    PartInput p;
    p.arity = key.first;
    for (std::size_t l : cs.coalgebra().words(key.first).letters(key.second)) p.inputs.push_back(w.name(l));
    for (const auto& [k, c] : value) p.output.push_back({c, w.name(k)});
    out.push_back(render_part(p));
  }
  return out;
}

std::string format_cohomology(const std::vector<CohomologyDims>& dims, bool machine) {
  std::ostringstream out;
  if (!machine) out << "weight parity  cocycles coboundaries classes\n";
  for (const auto& d : dims) {
    if (machine) {
      std::string k = "cohomology." + std::to_string(d.weight) + "." + to_string(d.parity);
      out << k << ".cocycles = " << d.cocycles << "\n" << k << ".coboundaries = " << d.coboundaries << "\n"
          << k << ".classes = " << d.classes << "\n";
    } else {
      char line[96];
      std::snprintf(line, sizeof line, "%6d %-6s %9zu %12zu %7zu\n", d.weight, to_string(d.parity).c_str(), d.cocycles,
                    d.coboundaries, d.classes);
      out << line;
    }
  }
  return out.str();
}

namespace {

bool natural_less(const std::string& a, const std::string& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

std::string format_report(const MiniversalReport& r, bool machine) {
  std::ostringstream out;
  const MiniversalDeformation& m = r.miniversal;
  const BaseAlgebra& base = *m.deformation.base;
  const CochainSpace& cs = r.problem->cochains();

  std::vector<std::size_t> gen_order(m.generators.size());
  for (std::size_t i = 0; i < gen_order.size(); ++i) gen_order[i] = i;
  std::sort(gen_order.begin(), gen_order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ga = m.generators[a];
    const auto& gb = m.generators[b];
    if (ga.order != gb.order) return ga.order < gb.order;
    return natural_less(ga.name, gb.name);
  });
  std::vector<std::size_t> mono_order(base.dim());
  for (std::size_t i = 0; i < mono_order.size(); ++i) mono_order[i] = i;
  std::sort(mono_order.begin(), mono_order.end(), [&](std::size_t a, std::size_t b) {
    if (base.order(a) != base.order(b)) return base.order(a) < base.order(b);
    return base.element(a).label < base.element(b).label;
  });

  std::string mode = r.options.strict ? "strict" : "full";
  if (machine) {
    out << "input.kind = " << to_string(r.input.kind) << "\n";
    out << "input.dimension = " << r.input.basis.size() << "\n";
    out << "input.weight_cap = " << r.weight_cap << "\n";
    out << "input.order = " << r.order << "\n";
    out << "input.mode = " << mode << "\n";
    out << "input.even_parameters = " << (r.options.even_parameters ? "true" : "false") << "\n";
    out << format_cohomology(r.cohomology, true);
    out << "base.generators = " << m.generators.size() << "\n";
    for (std::size_t g : gen_order) {
      const auto& gen = m.generators[g];
      out << "base.generator." << gen.name << ".parity = " << to_string(gen.parity) << "\n";
      out << "base.generator." << gen.name << ".order = " << gen.order << "\n";
    }
    out << "base.relations = " << m.relations.size() << "\n";
    for (std::size_t i = 0; i < m.relations.size(); ++i)
      out << "base.relation." << i + 1 << " = " << to_string(m.relations[i], m.generators) << "\n";
    out << "base.dimension = " << base.dim() << "\n";
    for (std::size_t i : mono_order) {
      auto lines = format_cochain(cs, m.deformation.delta[i]);
      for (std::size_t k = 0; k < lines.size(); ++k)
        out << "deformation." << base.element(i).label << "." << k + 1 << " = " << lines[k] << "\n";
    }
    for (const auto& s : m.steps) {
      std::string k = "steps." + std::to_string(s.order);
      out << k << ".module = " << s.module_dim << "\n" << k << ".obstruction_rank = " << s.obstruction_rank << "\n"
          << k << ".corrected = " << s.corrected_components << "\n" << k << ".base_dimension = " << s.base_dim << "\n";
    }
  } else {
    out << to_string(r.input.kind) << " algebra of dimension " << r.input.basis.size() << ", weight cap " << r.weight_cap
        << ", order " << r.order << ", " << mode << " mode\n\n";
    out << "cohomology\n" << format_cohomology(r.cohomology, false) << "\n";
    out << "parameters (" << m.generators.size() << ")\n";
    for (std::size_t g : gen_order)
      out << "  " << m.generators[g].name << "  " << to_string(m.generators[g].parity) << ", order " << m.generators[g].order
          << "\n";
    out << "\nrelations (" << m.relations.size() << ")\n";
    for (const auto& rel : m.relations) out << "  " << to_string(rel, m.generators) << "\n";
    out << "\nbase dimension " << base.dim() << "\n\ndeformation\n";
    for (std::size_t i : mono_order)
      for (const auto& line : format_cochain(cs, m.deformation.delta[i])) out << "  " << base.element(i).label << "  " << line << "\n";
    out << "\norder  module  obstruction rank  corrected  base dim\n";
    for (const auto& s : m.steps) {
      char line[96];
      std::snprintf(line, sizeof line, "%5d %7zu %17zu %10zu %9zu\n", s.order, s.module_dim, s.obstruction_rank,
                    s.corrected_components, s.base_dim);
      out << line;
    }
  }

  if (r.verify) {
    const VerifyResult& v = *r.verify;
    const BaseAlgebra& tb = *r.target->base;
    if (machine) {
      out << "verify.ok = " << (v.ok ? "true" : "false") << "\n";
      out << "verify.message = " << v.message << "\n";
      if (v.factorization)
        for (std::size_t g : gen_order)
          out << "verify.image." << m.generators[g].name << " = " << format_element(tb, v.factorization->generator_images[g]) << "\n";
    } else {
      out << "\nverify: " << v.message << "\n";
      if (v.factorization)
        for (std::size_t g : gen_order)
          out << "  " << m.generators[g].name << " -> " << format_element(tb, v.factorization->generator_images[g]) << "\n";
    }
  }
  return out.str();
}

}  // namespace codiff
