#include "arck/session.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include <json.hpp>

#include "arck/artinrees.hpp"
#include "arck/error.hpp"

namespace arck::session {

using Json = nlohmann::ordered_json;

const TaskParam* TaskDecl::find(std::string_view key) const {
  for (const auto& p : params)
    if (p.key == key) return &p;
  return nullptr;
}

const RingDecl* Session::ring(std::string_view name) const {
  for (const auto& r : rings)
    if (r.name == name) return &r;
  return nullptr;
}

const IdealDecl* Session::ideal(std::string_view name) const {
  for (const auto& i : ideals)
    if (i.name == name) return &i;
  return nullptr;
}

const char* to_string(TaskStatus s) {
  switch (s) {
    case TaskStatus::Pass: return "pass";
    case TaskStatus::ExpectationFailed: return "expectation-failed";
    case TaskStatus::ContractError: return "contract-error";
    case TaskStatus::ResourceCap: return "resource-cap";
  }
  return "?";
}

namespace {

// ---------------------------------------------------------------------------
// Lexical layer

struct Value {
  std::string text;
  SourcePos pos;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

bool is_ident(std::string_view s, bool allow_dash = false) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [&](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || (allow_dash && c == '-');
  });
}

// Splits on commas outside parentheses and braces. Values never span lines, so
// columns are offsets from the value's start.
std::vector<Value> split_top(const Value& v) {
  std::vector<Value> out;
  int depth = 0;
  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    std::string_view piece = std::string_view(v.text).substr(start, end - start);
    std::size_t lead = 0;
    while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
    out.push_back({trim(piece), {v.pos.line, v.pos.column + start + lead}});
  };
  for (std::size_t i = 0; i < v.text.size(); ++i) {
    char c = v.text[i];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      emit(i);
      start = i + 1;
    }
  }
  emit(v.text.size());
  return out;
}

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] == '\n') line_starts_.push_back(i + 1);
  }

  SourcePos at(std::size_t p) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), p);
    std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
    return {line, p - line_starts_[line - 1] + 1};
  }
  SourcePos here() const { return at(pos_); }

  [[noreturn]] void fail(const std::string& what) const { fail_at(here(), what); }
  [[noreturn]] static void fail_at(SourcePos p, const std::string& what) { throw ParseError(what, p.line, p.column); }

  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  void advance() { ++pos_; }

  // Skips blanks and comments; newlines too when `lines` is set.
  void skip(bool lines) {
    while (!done()) {
      char c = s_[pos_];
      if (c == '#') {
        while (!done() && s_[pos_] != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r' || (lines && c == '\n')) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string ident(const char* what, bool allow_dash = false) {
    skip(false);
    std::size_t start = pos_;
    while (!done() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                       (allow_dash && s_[pos_] == '-')))
      ++pos_;
    std::string word(s_.substr(start, pos_ - start));
    if (!is_ident(word, allow_dash)) {
      pos_ = start;
      fail(std::string("expected ") + what);
    }
    return word;
  }

  void expect(char c, bool lines = false) {
    skip(lines);
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  // Raw text up to a depth-0 stop character, newline, comment or end.
  Value value(std::string_view stops) {
    skip(false);
    std::size_t start = pos_;
    int depth = 0;
    while (!done()) {
      char c = s_[pos_];
      if (c == '\n' || c == '#') break;
      if (depth == 0 && stops.find(c) != std::string_view::npos) break;
      if (c == '(' || c == '{') ++depth;
      if (c == ')' || c == '}') --depth;
      ++pos_;
    }
    return {trim(s_.substr(start, pos_ - start)), at(start)};
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<std::size_t> line_starts_;
};

// ---------------------------------------------------------------------------
// Task schema

enum class Arg { IdealRef, RingRef, Poly, Uint, OpName, FieldSpec, Expect };

const std::map<std::string, Arg>& arg_types() {
  static const std::map<std::string, Arg> t{
      {"I", Arg::IdealRef},   {"J", Arg::IdealRef}, {"N1", Arg::IdealRef},    {"N2", Arg::IdealRef},
      {"ring", Arg::RingRef}, {"f", Arg::Poly},     {"n", Arg::Uint},         {"nmax", Arg::Uint},
      {"h", Arg::Uint},       {"d", Arg::Uint},     {"attempts", Arg::Uint},  {"op", Arg::OpName},
      {"field", Arg::FieldSpec}, {"expect", Arg::Expect}};
  return t;
}

const std::map<std::string, std::set<std::string>>& allowed_keys() {
  static const std::map<std::string, std::set<std::string>> k{
      {"gb", {"I"}},
      {"op", {"op", "I", "J", "f", "n", "h", "d", "attempts", "ring", "expect"}},
      {"ar", {"I", "J", "nmax", "expect"}},
      {"reltype", {"I", "expect"}},
      {"bound", {"J", "expect"}},
      {"example1", {"n", "field", "expect"}},
      {"example2", {"n", "field", "expect"}},
      {"lemma-checks", {"I", "J", "nmax", "h", "N1", "N2", "n", "expect"}},
  };
  return k;
}

enum class ExpectKind { None, Bool, Uint, UintOrNone, Pair };

struct OpSpec {
  std::vector<std::string> required;
  ExpectKind expect;
};

const std::map<std::string, OpSpec>& op_specs() {
  static const std::map<std::string, OpSpec> o{
      {"sum", {{"I", "J"}, ExpectKind::None}},
      {"product", {{"I", "J"}, ExpectKind::None}},
      {"intersect", {{"I", "J"}, ExpectKind::None}},
      {"colon", {{"I"}, ExpectKind::None}},
      {"saturate", {{"I"}, ExpectKind::None}},
      {"power", {{"I", "n"}, ExpectKind::None}},
      {"member", {{"I", "f"}, ExpectKind::Bool}},
      {"equal", {{"I", "J"}, ExpectKind::Bool}},
      {"subset", {{"I", "J"}, ExpectKind::Bool}},
      {"mprimary", {{"I"}, ExpectKind::Bool}},
      {"dims", {{"I", "d"}, ExpectKind::Uint}},
      {"truncated", {{"I", "f", "d"}, ExpectKind::Bool}},
      {"multiplicity", {{}, ExpectKind::Uint}},
      {"h0", {{"J"}, ExpectKind::Uint}},
      {"reduction", {{"I", "n"}, ExpectKind::Bool}},
      {"strong", {{"I", "J", "h", "n"}, ExpectKind::Bool}},
      {"weak", {{"I", "J", "h", "n"}, ExpectKind::Bool}},
  };
  return o;
}

bool is_relationtype_variant(const TaskDecl& t) { return t.find("N1") == nullptr; }

ExpectKind expect_kind(const TaskDecl& t) {
  if (t.kind == "gb") return ExpectKind::None;
  if (t.kind == "op") return op_specs().at(t.find("op")->value).expect;
  if (t.kind == "ar" || t.kind == "bound") return ExpectKind::UintOrNone;
  if (t.kind == "reltype") return ExpectKind::Uint;
  if (t.kind == "example1" || t.kind == "example2") return ExpectKind::Pair;
  return is_relationtype_variant(t) ? ExpectKind::Bool : ExpectKind::UintOrNone;
}

unsigned parse_uint(const Value& v) {
  if (v.text.empty() || !std::all_of(v.text.begin(), v.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      v.text.size() > 9)
    Scanner::fail_at(v.pos, "expected a non-negative integer, got '" + v.text + "'");
  return static_cast<unsigned>(std::stoul(v.text));
}

bool parse_bool(const Value& v) {
  if (v.text == "yes" || v.text == "true") return true;
  if (v.text == "no" || v.text == "false") return false;
  Scanner::fail_at(v.pos, "expected yes or no, got '" + v.text + "'");
}

Field parse_field(const Value& v) {
  std::string t = v.text;
  if (t == "Q" || t == "QQ") return Field::rationals();
  std::string rest;
  if (t.rfind("Fp", 0) == 0) rest = trim(std::string_view(t).substr(2));
  if (!rest.empty() && rest.front() == '(' && rest.back() == ')') rest = trim(rest.substr(1, rest.size() - 2));
  if (rest.empty()) Scanner::fail_at(v.pos, "expected field 'Q' or 'Fp P', got '" + t + "'");
  unsigned long long p = 0;
  try {
    p = parse_uint({rest, v.pos});
  } catch (const ParseError&) {
    Scanner::fail_at(v.pos, "expected field 'Q' or 'Fp P', got '" + t + "'");
  }
  try {
    return Field::prime(p);
  } catch (const ContractError& e) {
    Scanner::fail_at(v.pos, e.what());
  }
}

struct PairExpect {
  bool in;
  bool out;
};

PairExpect parse_pair(const Value& v) {
  std::string t = v.text;
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    Scanner::fail_at(v.pos, "expected (in:yes|no, out:yes|no)");
  Value inner{t.substr(1, t.size() - 2), {v.pos.line, v.pos.column + 1}};
  std::optional<bool> in, out;
  for (const auto& piece : split_top(inner)) {
    auto colon = piece.text.find(':');
    if (colon == std::string::npos) Scanner::fail_at(piece.pos, "expected key:value in expectation");
    std::string key = trim(std::string_view(piece.text).substr(0, colon));
    Value val{trim(std::string_view(piece.text).substr(colon + 1)), piece.pos};
    if (key == "in") in = parse_bool(val);
    else if (key == "out") out = parse_bool(val);
    else Scanner::fail_at(piece.pos, "unknown expectation key '" + key + "'");
  }
  if (!in || !out) Scanner::fail_at(v.pos, "expectation needs both in and out");
  return {*in, *out};
}

Value as_value(const TaskParam& p) { return {p.value, p.pos}; }

std::optional<unsigned> parse_uint_or_none(const Value& v) {
  if (v.text == "none") return std::nullopt;
  return parse_uint(v);
}

void validate_expect(const TaskDecl& t, const TaskParam& p) {
  Value v = as_value(p);
  switch (expect_kind(t)) {
    case ExpectKind::None: Scanner::fail_at(p.pos, "task kind '" + t.kind + "' takes no expectation");
    case ExpectKind::Bool: parse_bool(v); return;
    case ExpectKind::Uint: parse_uint(v); return;
    case ExpectKind::UintOrNone: parse_uint_or_none(v); return;
    case ExpectKind::Pair: parse_pair(v); return;
  }
}

// ---------------------------------------------------------------------------
// Statement parsing

class SessionParser {
 public:
  SessionParser(std::string_view text, const ParseOptions& options) : sc_(text), options_(options) {}

  Session parse() {
    while (true) {
      sc_.skip(true);
      if (sc_.done()) break;
      SourcePos pos = sc_.here();
      std::string word = sc_.ident("'ring', 'ideal' or 'task'");
      if (word == "ring") ring(pos);
      else if (word == "ideal") ideal(pos);
      else if (word == "task") task(pos);
      else Scanner::fail_at(pos, "expected 'ring', 'ideal' or 'task', got '" + word + "'");
    }
    for (auto& t : s_.tasks) validate(t);
    return std::move(s_);
  }

 private:
  void claim_name(const std::string& name, SourcePos pos) {
    if (!names_.insert(name).second) Scanner::fail_at(pos, "duplicate name '" + name + "'");
  }

  std::vector<std::pair<std::string, Value>> entries(std::string_view separators) {
    std::vector<std::pair<std::string, Value>> out;
    sc_.expect('{', true);
    while (true) {
      sc_.skip(true);
      while (!sc_.done() && separators.find(sc_.peek()) != std::string_view::npos) {
        sc_.advance();
        sc_.skip(true);
      }
      if (sc_.done()) sc_.fail("unterminated block, expected '}'");
      if (sc_.peek() == '}') {
        sc_.advance();
        return out;
      }
      SourcePos kpos = sc_.here();
      std::string key = sc_.ident("a key");
      for (const auto& [k, v] : out)
        if (k == key) Scanner::fail_at(kpos, "duplicate key '" + key + "'");
      sc_.expect('=');
      std::string stops(separators);
      stops += '}';
      Value v = sc_.value(stops);
      if (v.text.empty()) Scanner::fail_at(v.pos, "missing value for '" + key + "'");
      out.emplace_back(key, v);
    }
  }

  void ring(SourcePos pos) {
    RingDecl decl;
    decl.pos = pos;
    SourcePos npos = (sc_.skip(false), sc_.here());
    decl.name = sc_.ident("a ring name");
    claim_name(decl.name, npos);
    auto kv = entries(";");
    std::map<std::string, Value> m;
    for (auto& [k, v] : kv) {
      if (k != "field" && k != "vars" && k != "weights" && k != "order" && k != "quotient")
        Scanner::fail_at(v.pos, "unknown ring key '" + k + "'");
      m.emplace(k, v);
    }
    Field field = m.count("field") ? parse_field(m.at("field")) : Field::rationals();
    if (!m.count("vars")) Scanner::fail_at(pos, "ring '" + decl.name + "' declares no vars");
    std::vector<std::string> vars;
    for (const auto& v : split_top(m.at("vars"))) {
      if (!is_ident(v.text)) Scanner::fail_at(v.pos, "invalid variable name '" + v.text + "'");
      if (std::find(vars.begin(), vars.end(), v.text) != vars.end())
        Scanner::fail_at(v.pos, "duplicate variable '" + v.text + "'");
      vars.push_back(v.text);
    }
    std::vector<int> weights(vars.size(), 1);
    if (m.count("weights")) {
      auto ws = split_top(m.at("weights"));
      if (ws.size() != vars.size()) Scanner::fail_at(m.at("weights").pos, "weights must match the number of vars");
      for (std::size_t i = 0; i < ws.size(); ++i) {
        weights[i] = static_cast<int>(parse_uint(ws[i]));
        if (weights[i] < 1) Scanner::fail_at(ws[i].pos, "weights must be positive");
      }
    }
    decl.order_name = m.count("order") ? m.at("order").text : "grevlex";
    OrderKind kind;
    if (decl.order_name == "lex") kind = OrderKind::Lex;
    else if (decl.order_name == "grevlex") kind = OrderKind::GRevLex;
    else if (decl.order_name == "wgrevlex") kind = OrderKind::WeightedGRevLex;
    else Scanner::fail_at(m.at("order").pos, "unknown order '" + decl.order_name + "' (lex, grevlex, wgrevlex)");
    auto ambient = make_ring(field, vars, weights, kind, options_.degree_cap);
    std::vector<Polynomial> q;
    if (m.count("quotient"))
      for (const auto& v : split_top(m.at("quotient"))) q.push_back(parse_polynomial(v.text, ambient, v.pos));
    decl.ring = RingPresentation::create(ambient, std::move(q));
    s_.rings.push_back(std::move(decl));
  }

  void ideal(SourcePos pos) {
    IdealDecl decl;
    decl.pos = pos;
    sc_.skip(false);
    SourcePos npos = sc_.here();
    decl.name = sc_.ident("an ideal name");
    claim_name(decl.name, npos);
    sc_.skip(false);
    SourcePos inpos = sc_.here();
    if (sc_.ident("'in'") != "in") Scanner::fail_at(inpos, "expected 'in'");
    sc_.skip(false);
    SourcePos rpos = sc_.here();
    decl.ring = sc_.ident("a ring name");
    const RingDecl* r = s_.ring(decl.ring);
    if (!r) Scanner::fail_at(rpos, "unknown ring '" + decl.ring + "'");
    sc_.expect('=');
    Value v = sc_.value("");
    if (v.text.empty()) Scanner::fail_at(v.pos, "ideal '" + decl.name + "' has no generators (write 0 for the zero ideal)");
    std::vector<Polynomial> gens;
    for (const auto& g : split_top(v)) gens.push_back(parse_polynomial(g.text, r->ring->ambient(), g.pos));
    decl.ideal = Ideal(r->ring, std::move(gens));
    s_.ideals.push_back(std::move(decl));
  }

  void task(SourcePos pos) {
    TaskDecl decl;
    decl.pos = pos;
    decl.kind = sc_.ident("a task kind", true);
    if (!allowed_keys().count(decl.kind)) Scanner::fail_at(pos, "unknown task kind '" + decl.kind + "'");
    sc_.skip(false);
    if (sc_.peek() != '{' && sc_.peek() != '\n') {
      SourcePos npos = sc_.here();
      decl.name = sc_.ident("a task name or '{'", true);
      if (!task_names_.insert(decl.name).second) Scanner::fail_at(npos, "duplicate task name '" + decl.name + "'");
    } else {
      decl.name = decl.kind + std::to_string(s_.tasks.size() + 1);
      while (!task_names_.insert(decl.name).second) decl.name += "_";
    }
    for (auto& [k, v] : entries(",")) decl.params.push_back({k, v.text, v.pos});
    s_.tasks.push_back(std::move(decl));
  }

  const IdealDecl& ideal_ref(const TaskParam& p) {
    const IdealDecl* i = s_.ideal(p.value);
    if (!i) Scanner::fail_at(p.pos, "unknown ideal '" + p.value + "'");
    return *i;
  }

  void validate(const TaskDecl& t) {
    const auto& allowed = allowed_keys().at(t.kind);
    for (const auto& p : t.params)
      if (!allowed.count(p.key)) Scanner::fail_at(p.pos, "task '" + t.kind + "' does not take key '" + p.key + "'");
    auto need = [&](const char* key) {
      if (!t.find(key)) Scanner::fail_at(t.pos, "task '" + t.name + "' needs key '" + key + "'");
    };
    std::vector<std::string> required;
    if (t.kind == "gb" || t.kind == "reltype") required = {"I"};
    if (t.kind == "ar") required = {"I", "J", "nmax"};
    if (t.kind == "bound") required = {"J"};
    if (t.kind == "example1" || t.kind == "example2") required = {"n"};
    if (t.kind == "lemma-checks")
      required = is_relationtype_variant(t) ? std::vector<std::string>{"I", "J", "nmax"}
                                            : std::vector<std::string>{"N1", "N2", "n"};
    if (t.kind == "op") {
      need("op");
      const TaskParam* op = t.find("op");
      auto it = op_specs().find(op->value);
      if (it == op_specs().end()) Scanner::fail_at(op->pos, "unknown op '" + op->value + "'");
      required = it->second.required;
      if (op->value == "colon" && !t.find("J") && !t.find("f"))
        Scanner::fail_at(t.pos, "op colon needs J or f");
      if (op->value == "multiplicity" && !t.find("ring") && !t.find("I"))
        Scanner::fail_at(t.pos, "op multiplicity needs ring or I");
    }
    for (const auto& k : required) need(k.c_str());

    std::optional<RingPtr> ring;
    for (const auto& p : t.params) {
      switch (arg_types().at(p.key)) {
        case Arg::IdealRef: {
          const IdealDecl& i = ideal_ref(p);
          if (ring && *ring != i.ideal.ring()) Scanner::fail_at(p.pos, "ideal '" + p.value + "' lives in a different ring");
          ring = i.ideal.ring();
          break;
        }
        case Arg::RingRef:
          if (!s_.ring(p.value)) Scanner::fail_at(p.pos, "unknown ring '" + p.value + "'");
          break;
        case Arg::Uint: parse_uint(as_value(p)); break;
        case Arg::FieldSpec: parse_field(as_value(p)); break;
        default: break;
      }
    }
    if (const TaskParam* f = t.find("f")) {
      if (!ring) Scanner::fail_at(f->pos, "polynomial argument needs an ideal to fix its ring");
      parse_polynomial(f->value, (*ring)->ambient(), f->pos);
    }
    if (t.kind == "example1" || t.kind == "example2") {
      unsigned n = parse_uint(as_value(*t.find("n")));
      if (n < 2) Scanner::fail_at(t.find("n")->pos, "example families need n >= 2");
      if (const TaskParam* fp = t.find("field"); fp && t.kind == "example1") {
        Field field = parse_field(as_value(*fp));
        if (!field.is_rational() && field.characteristic() <= n)
          Scanner::fail_at(fp->pos, "example1 needs characteristic p > n (got p=" +
                                        std::to_string(field.characteristic()) + ", n=" + std::to_string(n) + ")");
      }
    }
    if (const TaskParam* e = t.find("expect")) validate_expect(t, *e);
  }

  Scanner sc_;
  ParseOptions options_;
  Session s_;
  std::set<std::string> names_;
  std::set<std::string> task_names_;
};

std::string join_polys(const std::vector<Polynomial>& ps) {
  if (ps.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + format_polynomial(ps[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Task execution

struct ExpectationFailure {
  std::string what;
};

class TaskRunner {
 public:
  TaskRunner(const Session& s, const TaskDecl& t, const RunOptions& o, TaskReport& r) : s_(s), t_(t), o_(o), r_(r) {}

  void run() {
    if (t_.kind == "gb") gb();
    else if (t_.kind == "op") op();
    else if (t_.kind == "ar") ar();
    else if (t_.kind == "reltype") reltype_task();
    else if (t_.kind == "bound") bound();
    else if (t_.kind == "example1" || t_.kind == "example2") example();
    else lemma();
  }

 private:
  const Ideal& ideal(const char* key) const { return s_.ideal(t_.find(key)->value)->ideal; }
  unsigned uint(const char* key) const { return parse_uint(as_value(*t_.find(key))); }
  unsigned uint_or(const char* key, unsigned fallback) const { return t_.find(key) ? uint(key) : fallback; }
  Polynomial poly(const char* key) const {
    const TaskParam* p = t_.find(key);
    return parse_polynomial(p->value, ideal("I").ambient(), p->pos);
  }

  template <class T>
  void put(const std::string& key, const T& value) {
    r_.verdict.emplace_back(key, Json(value).dump());
  }
  void put_none(const std::string& key) { r_.verdict.emplace_back(key, Json("none").dump()); }
  void put_polys(const std::string& key, const std::vector<Polynomial>& ps) {
    Json arr = Json::array();
    for (const auto& p : ps) arr.push_back(format_polynomial(p));
    r_.verdict.emplace_back(key, arr.dump());
  }

  void check_bool(bool actual) {
    const TaskParam* e = t_.find("expect");
    if (!e) return;
    if (parse_bool(as_value(*e)) != actual)
      throw ExpectationFailure{std::string("expected ") + e->value + ", got " + (actual ? "yes" : "no")};
  }
  void check_uint(std::optional<unsigned> actual) {
    const TaskParam* e = t_.find("expect");
    if (!e) return;
    std::optional<unsigned> want = parse_uint_or_none(as_value(*e));
    if (want != actual)
      throw ExpectationFailure{"expected " + e->value + ", got " + (actual ? std::to_string(*actual) : "none")};
  }

  void gb() {
    // The basis of I + Q, minus the elements already zero in R.
    const Ideal& i = ideal("I");
    std::vector<Polynomial> basis;
    for (const auto& g : i.basis().elements())
      if (!i.ring()->reduce(g).is_zero()) basis.push_back(g);
    put_polys("basis", basis);
    put("size", basis.size());
  }

  void op() {
    const std::string& name = t_.find("op")->value;
    if (name == "sum" || name == "product" || name == "intersect") {
      const Ideal& i = ideal("I");
      const Ideal& j = ideal("J");
      Ideal k = name == "sum" ? sum(i, j) : name == "product" ? product(i, j) : intersect(i, j);
      put_polys("generators", k.generators());
    } else if (name == "colon") {
      Ideal k = t_.find("f") ? colon(ideal("I"), poly("f")) : colon_ideal(ideal("I"), ideal("J"));
      put_polys("generators", k.generators());
    } else if (name == "saturate") {
      const Ideal& i = ideal("I");
      Ideal k = saturate(i, t_.find("J") ? ideal("J") : Ideal::maximal(i.ring()));
      put_polys("generators", k.generators());
    } else if (name == "power") {
      put_polys("generators", power(ideal("I"), uint("n")).generators());
    } else if (name == "member") {
      bool m = member(poly("f"), ideal("I"));
      put("member", m);
      check_bool(m);
    } else if (name == "truncated") {
      bool m = membership_truncated(poly("f"), ideal("I"), uint("d"));
      put("member", m);
      check_bool(m);
    } else if (name == "equal") {
      bool e = equal(ideal("I"), ideal("J"));
      put("equal", e);
      check_bool(e);
    } else if (name == "subset") {
      auto bad = first_non_member(ideal("I"), ideal("J"));
      put("subset", !bad);
      if (bad) r_.witnesses.push_back(format_polynomial(*bad));
      check_bool(!bad);
    } else if (name == "mprimary") {
      bool m = is_m_primary(ideal("I"));
      put("m_primary", m);
      check_bool(m);
    } else if (name == "dims") {
      auto mons = std_monomials(ideal("I"), uint("d"));
      put("dim", mons.size());
      Json arr = Json::array();
      for (const auto& m : mons) arr.push_back(format_monomial(m, *ideal("I").ambient()));
      r_.verdict.emplace_back("standard_monomials", arr.dump());
      check_uint(static_cast<unsigned>(mons.size()));
    } else if (name == "multiplicity") {
      RingPtr ring = t_.find("ring") ? s_.ring(t_.find("ring")->value)->ring : ideal("I").ring();
      unsigned e = multiplicity(ring);
      put("multiplicity", e);
      check_uint(e);
    } else if (name == "h0") {
      auto l = static_cast<unsigned>(h0_length(ideal("J")));
      put("h0_length", l);
      check_uint(l);
    } else if (name == "reduction") {
      auto y = find_reduction_element(ideal("I"), uint("n"), uint_or("attempts", 50), o_.seed);
      put("found", y.has_value());
      if (y) {
        put("element", format_polynomial(*y));
        r_.witnesses.push_back(format_polynomial(*y));
      }
      check_bool(y.has_value());
    } else {
      const Ideal& i = ideal("I");
      const Ideal& j = ideal("J");
      ArCheck c = name == "strong" ? check_strong_ar(i, j, uint("h"), uint("n")) : check_weak_ar(i, j, uint("h"), uint("n"));
      put("holds", c.holds);
      if (c.witness) r_.witnesses.push_back(format_polynomial(*c.witness));
      check_bool(c.holds);
    }
  }

  void ar() {
    ArReport rep = find_ar_table(ideal("I"), ideal("J"), uint("nmax"), o_.threads);
    if (rep.uniform_h) put("uniform_h", *rep.uniform_h);
    else put_none("uniform_h");
    Json mins = Json::array();
    for (unsigned n = 1; n <= rep.nmax; ++n) {
      if (rep.minimal_h[n]) mins.push_back(*rep.minimal_h[n]);
      else mins.push_back(nullptr);
    }
    r_.verdict.emplace_back("minimal_h", mins.dump());
    put("complete", rep.complete);
    for (const auto& w : rep.witnesses)
      r_.witnesses.push_back("n=" + std::to_string(w.n) + " h=" + std::to_string(w.h) + ": " + format_polynomial(w.element));
    if (!rep.complete) throw ResourceError("incomplete table: " + rep.incomplete_reason);
    check_uint(rep.uniform_h);
  }

  void reltype_task() {
    ReltypeReport rep = arck::reltype(ideal("I"));
    put("reltype", rep.reltype);
    put_polys("minimal_generators", rep.minimal_generators);
    put_polys("kernel", rep.kernel);
    for (const auto& c : rep.certificate) r_.witnesses.push_back(format_polynomial(c));
    check_uint(rep.reltype);
  }

  void bound() {
    TheoremBound b = theorem_bound(ideal("J"));
    if (b.bound) put("bound", *b.bound);
    else put("bound", "unavailable; empirical table only");
    put("r", b.r);
    put("h0_length", b.h0_length);
    put("cohen_macaulay", b.cohen_macaulay);
    check_uint(b.bound);
  }

  void example() {
    unsigned n = uint("n");
    Field field = t_.find("field") ? parse_field(as_value(*t_.find("field"))) : Field::rationals();
    ExampleVerdict v = t_.kind == "example1" ? verify_example1(n, field) : verify_example2(n, field);
    put("n", n);
    put("xi", format_polynomial(v.xi));
    put("in", v.in_power_cap_j);
    put("out", v.in_product);
    put("identity", v.identity_holds);
    r_.witnesses.push_back(format_polynomial(v.xi));
    if (const TaskParam* e = t_.find("expect")) {
      PairExpect want = parse_pair(as_value(*e));
      if (want.in != v.in_power_cap_j || want.out != v.in_product || !v.identity_holds)
        throw ExpectationFailure{"expected " + e->value + ", got (in:" + (v.in_power_cap_j ? "yes" : "no") +
                                 ", out:" + (v.in_product ? "yes" : "no") + ")" +
                                 (v.identity_holds ? "" : " and the defining identity failed")};
    }
  }

  void lemma() {
    if (is_relationtype_variant(t_)) {
      const Ideal& i = ideal("I");
      const Ideal& j = ideal("J");
      unsigned h = 0;
      if (t_.find("h")) {
        h = uint("h");
      } else {
        Ideal reduced = extend(i, quotient_ring(j));
        h = reduced.is_zero() ? 1 : arck::reltype(reduced).reltype;
      }
      LemmaCheck c = check_relationtype_lemma(i, j, h, uint("nmax"));
      put("h", c.h);
      put("reltype", c.reltype);
      put("holds", c.holds);
      if (c.witness)
        r_.witnesses.push_back("n=" + std::to_string(*c.failing_n) + ": " + format_polynomial(*c.witness));
      check_bool(c.holds);
    } else {
      auto h = least_lemma_first_h(ideal("N1"), ideal("N2"), uint("n"));
      if (h) put("least_h", *h);
      else put_none("least_h");
      check_uint(h);
    }
  }

  const Session& s_;
  const TaskDecl& t_;
  const RunOptions& o_;
  TaskReport& r_;
};

}  // namespace

Session parse_session(std::string_view text, const ParseOptions& options) {
  return SessionParser(text, options).parse();
}

std::string print_session(const Session& s) {
  std::string out;
  for (const auto& r : s.rings) {
    const auto& a = *r.ring->ambient();
    out += "ring " + r.name + " { field = " + a.field().to_string() + "; vars = ";
    for (std::size_t i = 0; i < a.nvars(); ++i) out += (i ? ", " : "") + a.vars()[i];
    out += "; weights = ";
    for (std::size_t i = 0; i < a.nvars(); ++i) out += (i ? ", " : "") + std::to_string(a.weights()[i]);
    out += "; order = " + r.order_name;
    if (r.ring->has_quotient()) out += "; quotient = " + join_polys(r.ring->quotient());
    out += " }\n";
  }
  for (const auto& i : s.ideals) out += "ideal " + i.name + " in " + i.ring + " = " + join_polys(i.ideal.generators()) + "\n";
  for (const auto& t : s.tasks) {
    out += "task " + t.kind + " " + t.name + " {";
    for (std::size_t k = 0; k < t.params.size(); ++k)
      out += (k ? ", " : " ") + t.params[k].key + " = " + t.params[k].value;
    out += " }\n";
  }
  return out;
}

bool operator==(const Session& a, const Session& b) {
  return print_session(a) == print_session(b);
}

RunResult run(const Session& s, const RunOptions& options) {
  RunResult result;
  bool any_contract = false, any_resource = false, any_expect = false;
  bool matched = false;
  for (const auto& t : s.tasks) {
    if (options.task_filter && *options.task_filter != t.name && *options.task_filter != t.kind) continue;
    matched = true;
    TaskReport r;
    r.name = t.name;
    r.kind = t.kind;
    for (const auto& p : t.params) r.inputs.emplace_back(p.key, p.value);
    auto start = std::chrono::steady_clock::now();
    try {
      TaskRunner(s, t, options, r).run();
    } catch (const ExpectationFailure& e) {
      r.status = TaskStatus::ExpectationFailed;
      r.message = e.what;
    } catch (const ResourceError& e) {
      r.status = TaskStatus::ResourceCap;
      r.message = e.what();
    } catch (const Error& e) {
      r.status = TaskStatus::ContractError;
      r.message = e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    any_contract |= r.status == TaskStatus::ContractError;
    any_resource |= r.status == TaskStatus::ResourceCap;
    any_expect |= r.status == TaskStatus::ExpectationFailed;
    result.tasks.push_back(std::move(r));
  }
  if (options.task_filter && !matched) {
    TaskReport r;
    r.name = *options.task_filter;
    r.kind = "filter";
    r.status = TaskStatus::ContractError;
    r.message = "no task named '" + *options.task_filter + "'";
    result.tasks.push_back(std::move(r));
    any_contract = true;
  }
  result.exit_code = any_contract ? 2 : any_resource ? 3 : any_expect ? 1 : 0;
  return result;
}

std::string RunResult::render_text() const {
  std::string out;
  for (const auto& r : tasks) {
    out += "task " + r.name + " (" + r.kind + ")\n";
    if (!r.inputs.empty()) {
      out += "  inputs:";
      for (std::size_t i = 0; i < r.inputs.size(); ++i)
        out += (i ? ", " : " ") + r.inputs[i].first + "=" + r.inputs[i].second;
      out += "\n";
    }
    for (const auto& [k, v] : r.verdict) {
      Json j = Json::parse(v);
      out += "  " + k + ": " + (j.is_string() ? j.get<std::string>() : v) + "\n";
    }
    for (const auto& w : r.witnesses) out += "  witness: " + w + "\n";
    out += "  status: " + std::string(to_string(r.status));
    if (!r.message.empty()) out += " (" + r.message + ")";
    out += "\n";
  }
  return out;
}

std::string RunResult::render_json() const {
  std::string out;
  for (const auto& r : tasks) {
    Json j;
    j["task"] = r.name;
    j["kind"] = r.kind;
    Json inputs = Json::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    j["inputs"] = inputs;
    Json verdict = Json::object();
    for (const auto& [k, v] : r.verdict) verdict[k] = Json::parse(v);
    j["verdict"] = verdict;
    j["status"] = to_string(r.status);
    if (!r.message.empty()) j["message"] = r.message;
    j["witnesses"] = r.witnesses;
    j["timings"] = {{"ms", r.millis}};
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace arck::session
