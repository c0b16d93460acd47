#include "tgwa/cli/spec_file.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

namespace tgwa::cli {

namespace {

Position pos(const YAML::Node& n) {
  YAML::Mark m = n.Mark();
  Position p{m.line + 1, m.column + 1};
  if (n.IsScalar() && n.Tag() == "!") ++p.column;  // past the opening quote
  return p;
}

[[noreturn]] void fail(const std::string& msg, const YAML::Node& at, const std::string& token = "") {
  throw ParseError(msg, pos(at), token);
}

YAML::Node load(const std::string& text) {
  try {
    return YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, {e.mark.line + 1, e.mark.column + 1}, "");
  }
}

std::string scalar(const YAML::Node& n, const std::string& what) {
  if (!n.IsScalar()) fail("expected " + what, n);
  return n.Scalar();
}

Ratfun expr(const YAML::Node& n, const Scope& scope) { return parse_ratfun(scalar(n, "an expression"), scope, pos(n)); }

Ratfun scalar_expr(const YAML::Node& n, const Scope& scope) {
  Ratfun r = expr(n, scope);
  if (!r.is_scalar()) fail("expected a scalar (no ring variables)", n, n.Scalar());
  if (r.is_zero()) fail("expected a nonzero scalar", n, n.Scalar());
  return r;
}

int integer(const YAML::Node& n, const std::string& what) {
  std::string s = scalar(n, what);
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  fail("expected " + what, n, s);
}

const YAML::Node sequence(const YAML::Node& n, const std::string& what) {
  if (!n.IsSequence()) fail("expected a list for " + what, n);
  return n;
}

Symbol declare_one(const YAML::Node& item, SymbolKind kind, Scope& scope) {
  std::string name = scalar(item, "a symbol name");
  if (!valid_symbol_name(name) || is_generator_name(name)) fail("invalid or reserved symbol name", item, name);
  if (scope.symbols.count(name)) fail("duplicate symbol", item, name);
  try {
    Symbol s = Symbol::intern(name, kind);
    scope.symbols.emplace(name, s);
    return s;
  } catch (const DomainError& e) {
    fail(e.what(), item, name);
  }
}

std::vector<Symbol> declare(const YAML::Node& n, SymbolKind kind, Scope& scope, const std::string& what) {
  std::vector<Symbol> out;
  if (!n) return out;
  for (const auto& item : sequence(n, what)) out.push_back(declare_one(item, kind, scope));
  return out;
}

// Parameters of an auxiliary file; names already in scope are shared.
void extra_params(const YAML::Node& n, Scope& scope) {
  for (const auto& item : sequence(n, "params")) {
    if (!scope.symbols.count(scalar(item, "a symbol name"))) declare_one(item, SymbolKind::parameter, scope);
  }
}

// name: {var: expr} blocks with required name_inv siblings, in document order.
std::vector<AutoDecl> automorphisms(const YAML::Node& block, const std::vector<Symbol>& vars, const Scope& scope,
                                    const std::string& what) {
  if (!block.IsMap()) fail("expected a map for " + what, block);
  std::set<std::string> names;
  for (const auto& kv : block) names.insert(scalar(kv.first, "an automorphism name"));
  auto images = [&](const YAML::Node& m) {
    if (!m.IsMap()) fail("expected a map of images", m);
    std::vector<Ratfun> out;
    for (Symbol v : vars) out.push_back(Ratfun(v));
    for (const auto& kv : m) {
      std::string var = scalar(kv.first, "a ring variable");
      std::size_t k = 0;
      while (k < vars.size() && vars[k].name() != var) ++k;
      if (k == vars.size()) fail("not a ring variable of this spec", kv.first, var);
      out[k] = expr(kv.second, scope);
    }
    return out;
  };
  std::vector<AutoDecl> out;
  for (const auto& kv : block) {
    std::string name = kv.first.Scalar();
    bool inverse = name.size() > 4 && name.compare(name.size() - 4, 4, "_inv") == 0;
    if (inverse) {
      if (!names.count(name.substr(0, name.size() - 4))) fail("inverse block without its automorphism", kv.first, name);
      continue;
    }
    if (!names.count(name + "_inv")) fail("missing inverse block '" + name + "_inv' for", kv.first, name);
    out.push_back({name, RingMap(vars, images(kv.second), images(block[name + "_inv"]))});
  }
  return out;
}

QEntry q_entry(const YAML::Node& n, const Scope& scope) {
  if (n.IsSequence()) {
    if (n.size() != 4) fail("a q entry lists [pp, pm, mp, mm]", n);
    return {scalar_expr(n[0], scope), scalar_expr(n[1], scope), scalar_expr(n[2], scope), scalar_expr(n[3], scope)};
  }
  Ratfun a = scalar_expr(n, scope);
  return {a, a.inverse(), a.inverse(), a};
}

QSystem q_block(const YAML::Node& n, std::size_t rows, std::size_t cols, const Scope& scope, const std::string& what) {
  sequence(n, what);
  if (n.size() != rows) fail(what + " needs " + std::to_string(rows) + " rows", n);
  QSystem q(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    sequence(n[i], what);
    if (n[i].size() != cols) fail(what + " needs " + std::to_string(cols) + " columns", n[i]);
    for (std::size_t j = 0; j < cols; ++j) q.set(i, j, q_entry(n[i][j], scope));
  }
  return q;
}

std::vector<std::vector<Ratfun>> square(const YAML::Node& n, std::size_t size, const Scope& scope,
                                        const std::string& what) {
  sequence(n, what);
  if (n.size() != size) fail(what + " must be " + std::to_string(size) + "x" + std::to_string(size), n);
  std::vector<std::vector<Ratfun>> out;
  for (const auto& row : n) {
    sequence(row, what);
    if (row.size() != size) fail(what + " must be " + std::to_string(size) + "x" + std::to_string(size), row);
    std::vector<Ratfun> r;
    for (const auto& e : row) r.push_back(scalar_expr(e, scope));
    out.push_back(std::move(r));
  }
  return out;
}

ParameterMatrix to_parameters(const std::vector<std::vector<Ratfun>>& m) {
  ParameterMatrix p(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) p.set(i, j, m[i][j]);
  }
  return p;
}

TwistingSystemSpec twist_from(const YAML::Node& n, const Scope& scope, std::size_t rank) {
  try {
    return TwistingSystemSpec(q_block(n, rank, rank, scope, "twist"));
  } catch (const DomainError& e) {
    fail(e.what(), n);
  }
}

void check_keys(const YAML::Node& doc, const std::set<std::string>& allowed) {
  for (const auto& kv : doc) {
    std::string key = scalar(kv.first, "a key");
    if (!allowed.count(key)) fail("unknown key", kv.first, key);
  }
}

YAML::Node required(const YAML::Node& doc, const std::string& key) {
  YAML::Node n = doc[key];
  if (!n) throw ParseError("missing required key", pos(doc), key);
  return n;
}

void emit_q(YAML::Emitter& out, const QSystem& q) {
  out << YAML::BeginSeq;
  for (std::size_t i = 0; i < q.rows(); ++i) {
    out << YAML::Flow << YAML::BeginSeq;
    for (std::size_t j = 0; j < q.cols(); ++j) {
      const QEntry& e = q(i, j);
      out << YAML::Flow << YAML::BeginSeq << e.pp.to_string() << e.pm.to_string() << e.mp.to_string()
          << e.mm.to_string() << YAML::EndSeq;
    }
    out << YAML::EndSeq;
  }
  out << YAML::EndSeq;
}

Scope merged(const Scope& a, const Scope& b) {
  Scope s = a;
  for (const auto& [k, v] : b.symbols) s.symbols.emplace(k, v);
  return s;
}

}  // namespace

Tgwd ProjectSpec::datum() const {
  std::vector<RingMap> sigma;
  for (const auto& a : autos) sigma.push_back(a.map);
  return Tgwd(vars, sigma, t);
}

Scope ProjectSpec::scope() const {
  Scope s;
  for (Symbol p : params) s.symbols.emplace(p.name(), p);
  for (Symbol v : vars) s.symbols.emplace(v.name(), v);
  return s;
}

bool operator==(const ProjectSpec& a, const ProjectSpec& b) {
  if (a.params != b.params || a.vars != b.vars || a.t != b.t || a.mu != b.mu) return false;
  if (a.qsystem != b.qsystem || a.twist != b.twist || a.cocycle != b.cocycle) return false;
  if (a.autos.size() != b.autos.size() || a.modules.size() != b.modules.size()) return false;
  for (std::size_t k = 0; k < a.autos.size(); ++k) {
    const auto &x = a.autos[k], &y = b.autos[k];
    if (x.name != y.name || x.map.domain() != y.map.domain() || x.map.images() != y.map.images() ||
        x.map.inverse_images() != y.map.inverse_images()) {
      return false;
    }
  }
  for (std::size_t k = 0; k < a.modules.size(); ++k) {
    const auto &x = a.modules[k], &y = b.modules[k];
    if (x.kind != y.kind || x.shift != y.shift || x.lambda != y.lambda) return false;
  }
  return true;
}

ProjectSpec parse_spec(const std::string& text) {
  YAML::Node doc = load(text);
  if (!doc.IsMap()) throw ParseError("a spec is a map with keys params, vars, autos, t, mu", {1, 1}, "");
  check_keys(doc, {"params", "vars", "autos", "t", "mu", "qsystem", "twist", "cocycle", "modules"});
  ProjectSpec spec;
  Scope scope;
  spec.params = declare(doc["params"], SymbolKind::parameter, scope, "params");
  spec.vars = declare(required(doc, "vars"), SymbolKind::variable, scope, "vars");
  spec.autos = automorphisms(required(doc, "autos"), spec.vars, scope, "autos");
  for (const auto& e : sequence(required(doc, "t"), "t")) spec.t.push_back(expr(e, scope));
  std::size_t n = spec.t.size();
  if (spec.autos.size() != n) {
    fail("t has " + std::to_string(n) + " entries but autos declares " + std::to_string(spec.autos.size()) +
             " automorphisms",
         doc["t"]);
  }
  spec.mu = to_parameters(square(required(doc, "mu"), n, scope, "mu"));
  if (doc["qsystem"]) {
    YAML::Node q = sequence(doc["qsystem"], "qsystem");
    std::size_t cols = q.size() && q[0].IsSequence() ? q[0].size() : 0;
    spec.qsystem = q_block(q, q.size(), cols, scope, "qsystem");
  }
  if (doc["twist"]) spec.twist = twist_from(doc["twist"], scope, n).q();
  if (doc["cocycle"]) spec.cocycle = square(doc["cocycle"], n, scope, "cocycle");
  if (doc["modules"]) {
    for (const auto& m : sequence(doc["modules"], "modules")) {
      if (!m.IsMap()) fail("a module is a map with kind, shift and lambda", m);
      check_keys(m, {"kind", "shift", "lambda"});
      ModuleDecl d;
      std::string kind = scalar(required(m, "kind"), "a module kind");
      if (kind == "U") {
        d.kind = SimpleKind::U;
      } else if (kind == "V") {
        d.kind = SimpleKind::V;
      } else if (kind == "M") {
        d.kind = SimpleKind::M;
      } else {
        fail("module kind must be U, V or M", m["kind"], kind);
      }
      if (m["shift"]) d.shift = integer(m["shift"], "an integer shift");
      if (m["lambda"]) d.lambda = scalar_expr(m["lambda"], scope);
      if (d.kind == SimpleKind::M && !d.lambda) fail("module M needs lambda", m);
      spec.modules.push_back(d);
    }
  }
  return spec;
}

std::string render_spec(const ProjectSpec& spec) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  auto names = [&](const char* key, const std::vector<Symbol>& syms) {
    out << YAML::Key << key << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (Symbol s : syms) out << s.name();
    out << YAML::EndSeq;
  };
  names("params", spec.params);
  names("vars", spec.vars);
  out << YAML::Key << "autos" << YAML::Value << YAML::BeginMap;
  for (const auto& a : spec.autos) {
    auto block = [&](const std::string& name, const std::vector<Ratfun>& images) {
      out << YAML::Key << name << YAML::Value << YAML::Flow << YAML::BeginMap;
      for (std::size_t k = 0; k < spec.vars.size(); ++k) {
        out << YAML::Key << spec.vars[k].name() << YAML::Value << images[k].to_string();
      }
      out << YAML::EndMap;
    };
    block(a.name, a.map.images());
    block(a.name + "_inv", *a.map.inverse_images());
  }
  out << YAML::EndMap;
  out << YAML::Key << "t" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (const auto& t : spec.t) out << t.to_string();
  out << YAML::EndSeq;
  out << YAML::Key << "mu" << YAML::Value << YAML::BeginSeq;
  for (std::size_t i = 0; i < spec.mu.size(); ++i) {
    out << YAML::Flow << YAML::BeginSeq;
    for (std::size_t j = 0; j < spec.mu.size(); ++j) out << spec.mu(i, j).to_string();
    out << YAML::EndSeq;
  }
  out << YAML::EndSeq;
  if (spec.qsystem) {
    out << YAML::Key << "qsystem" << YAML::Value;
    emit_q(out, *spec.qsystem);
  }
  if (spec.twist) {
    out << YAML::Key << "twist" << YAML::Value;
    emit_q(out, *spec.twist);
  }
  if (spec.cocycle) {
    out << YAML::Key << "cocycle" << YAML::Value << YAML::BeginSeq;
    for (const auto& row : *spec.cocycle) {
      out << YAML::Flow << YAML::BeginSeq;
      for (const auto& c : row) out << c.to_string();
      out << YAML::EndSeq;
    }
    out << YAML::EndSeq;
  }
  if (!spec.modules.empty()) {
    out << YAML::Key << "modules" << YAML::Value << YAML::BeginSeq;
    for (const auto& m : spec.modules) {
      out << YAML::Flow << YAML::BeginMap;
      out << YAML::Key << "kind" << YAML::Value
          << (m.kind == SimpleKind::U ? "U" : m.kind == SimpleKind::V ? "V" : "M");
      out << YAML::Key << "shift" << YAML::Value << m.shift;
      if (m.lambda) out << YAML::Key << "lambda" << YAML::Value << m.lambda->to_string();
      out << YAML::EndMap;
    }
    out << YAML::EndSeq;
  }
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExchangeSpec parse_exchange(const std::string& text, const ProjectSpec& a, const ProjectSpec& b) {
  YAML::Node doc = load(text);
  if (!doc.IsMap()) throw ParseError("an exchange file is a map with keys params, qsystem, rho, sigma", {1, 1}, "");
  check_keys(doc, {"params", "qsystem", "rho", "sigma"});
  Scope own = merged(a.scope(), b.scope());
  if (doc["params"]) {
    extra_params(doc["params"], own);
  }
  Tgwd da = a.datum(), db = b.datum();
  ExchangeSpec out{QSystem(db.rank(), da.rank()), TensorExtension::trivial(da, db)};
  if (doc["qsystem"]) out.q = q_block(doc["qsystem"], db.rank(), da.rank(), own, "qsystem");
  if (doc["rho"]) {
    auto rho = automorphisms(doc["rho"], a.vars, own, "rho");
    if (rho.size() != db.rank()) fail("rho needs one automorphism per generator of the second factor", doc["rho"]);
    for (std::size_t k = 0; k < rho.size(); ++k) out.ext.rho_on_r[k] = rho[k].map;
  }
  if (doc["sigma"]) {
    auto sigma = automorphisms(doc["sigma"], b.vars, own, "sigma");
    if (sigma.size() != da.rank()) fail("sigma needs one automorphism per generator of the first factor", doc["sigma"]);
    for (std::size_t k = 0; k < sigma.size(); ++k) out.ext.sigma_on_s[k] = sigma[k].map;
  }
  return out;
}

TwistingSystemSpec parse_twist_file(const std::string& text, const ProjectSpec& a) {
  YAML::Node doc = load(text);
  if (!doc.IsMap()) throw ParseError("a twisting file is a map with keys params and twist or cocycle", {1, 1}, "");
  check_keys(doc, {"params", "twist", "cocycle"});
  Scope scope = a.scope();
  if (doc["params"]) {
    extra_params(doc["params"], scope);
  }
  if (doc["twist"]) return twist_from(doc["twist"], scope, a.rank());
  if (doc["cocycle"]) return cocycle_to_spec(CocycleSpec(square(doc["cocycle"], a.rank(), scope, "cocycle")));
  throw ParseError("a twisting file needs a twist or cocycle block", {1, 1}, "");
}

TwistingSystemSpec spec_twist(const ProjectSpec& a) {
  if (a.twist) return TwistingSystemSpec(*a.twist);
  if (a.cocycle) return cocycle_to_spec(CocycleSpec(*a.cocycle));
  throw PreconditionError("the spec has no twist or cocycle block; pass --spec FILE");
}

ParameterMatrix parse_matrix_arg(const std::string& text, const ProjectSpec& spec) {
  return to_parameters(square(load(text), spec.rank(), spec.scope(), "matrix"));
}

}  // namespace tgwa::cli
