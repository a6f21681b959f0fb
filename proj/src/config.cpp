#include "ccrlab/config.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace ccrlab {

namespace {

struct Value {
  enum class Kind { String, Number, Bool, Array } kind;
  std::string text;  // String content or Number token
  bool boolean = false;
  std::vector<Value> items;
};

class Parser {
 public:
  Parser(const std::string& text, std::string source) : text_(text), source_(std::move(source)) {}

  std::map<std::string, std::map<std::string, Value>> parse() {
    std::map<std::string, std::map<std::string, Value>> tables;
    std::string current;  // "" = top level
    std::istringstream lines(text_);
    std::string line;
    int lineNo = 0;
    while (std::getline(lines, line)) {
      ++lineNo;
      lineNo_ = lineNo;
      std::string trimmed = strip(line);
      if (trimmed.empty() || trimmed[0] == '#') continue;
      if (trimmed.front() == '[') {
        if (trimmed.back() != ']') error("unterminated table header");
        current = strip(trimmed.substr(1, trimmed.size() - 2));
        if (current.empty()) error("empty table name");
        continue;
      }
      auto eq = trimmed.find('=');
      if (eq == std::string::npos) error("expected key = value");
      std::string key = strip(trimmed.substr(0, eq));
      std::string rest = strip(trimmed.substr(eq + 1));
      if (key.empty() || rest.empty()) error("expected key = value");
      size_t pos = 0;
      Value v = parse_value(rest, pos);
      if (pos != rest.size() && !strip(rest.substr(pos)).empty()) error("trailing characters");
      if (tables[current].count(key)) error("duplicate key '" + key + "'");
      tables[current][key] = std::move(v);
    }
    return tables;
  }

 private:
  static std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    std::string out = s.substr(b, e - b + 1);
    // strip trailing comment outside strings
    bool inString = false;
    for (size_t i = 0; i < out.size(); ++i) {
      if (out[i] == '"') inString = !inString;
      if (out[i] == '#' && !inString) {
        out = out.substr(0, i);
        size_t last = out.find_last_not_of(" \t");
        return last == std::string::npos ? "" : out.substr(0, last + 1);
      }
    }
    return out;
  }

  Value parse_value(const std::string& s, size_t& pos) {
    skip_space(s, pos);
    if (pos >= s.size()) error("expected a value");
    char c = s[pos];
    if (c == '"') {
      ++pos;
      std::string content;
      while (pos < s.size() && s[pos] != '"') content.push_back(s[pos++]);
      if (pos >= s.size()) error("unterminated string");
      ++pos;
      return Value{Value::Kind::String, content, false, {}};
    }
    if (c == '[') {
      ++pos;
      Value array{Value::Kind::Array, "", false, {}};
      skip_space(s, pos);
      if (pos < s.size() && s[pos] == ']') {
        ++pos;
        return array;
      }
      while (true) {
        array.items.push_back(parse_value(s, pos));
        skip_space(s, pos);
        if (pos >= s.size()) error("unterminated array");
        if (s[pos] == ',') {
          ++pos;
          continue;
        }
        if (s[pos] == ']') {
          ++pos;
          return array;
        }
        error("expected ',' or ']' in array");
      }
    }
    // bare token: bool or number
    size_t start = pos;
    while (pos < s.size() && s[pos] != ',' && s[pos] != ']' && s[pos] != ' ' && s[pos] != '\t')
      ++pos;
    std::string token = s.substr(start, pos - start);
    if (token == "true" || token == "false")
      return Value{Value::Kind::Bool, token, token == "true", {}};
    if (token.find_first_not_of("0123456789+-./") != std::string::npos)
      error("bad token '" + token + "'");
    return Value{Value::Kind::Number, token, false, {}};
  }

  static void skip_space(const std::string& s, size_t& pos) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  [[noreturn]] void error(const std::string& what) {
    fail(ErrorCode::ParseError, source_ + ":" + std::to_string(lineNo_) + ": " + what);
  }

  const std::string& text_;
  std::string source_;
  int lineNo_ = 0;
};

class ConfigReader {
 public:
  ConfigReader(std::map<std::string, std::map<std::string, Value>> tables, std::string source)
      : tables_(std::move(tables)), source_(std::move(source)) {}

  const Value* take(const std::string& table, const std::string& key) {
    auto t = tables_.find(table);
    if (t == tables_.end()) return nullptr;
    auto k = t->second.find(key);
    if (k == t->second.end()) return nullptr;
    consumed_.insert(table + "\n" + key);
    return &k->second;
  }

  void finish() const {
    for (const auto& [table, keys] : tables_)
      for (const auto& [key, value] : keys)
        if (!consumed_.count(table + "\n" + key))
          fail(ErrorCode::ParseError, source_ + ": unknown key '" +
                                          (table.empty() ? key : table + "." + key) + "'");
  }

 private:
  std::map<std::string, std::map<std::string, Value>> tables_;
  std::set<std::string> consumed_;
  std::string source_;
};

Rat value_to_rational(const Value& v, const std::string& what) {
  if (v.kind == Value::Kind::String || v.kind == Value::Kind::Number) return parse_rational(v.text);
  fail(ErrorCode::ParseError, what + " must be a rational string or number");
}

long value_to_int(const Value& v, const std::string& what) {
  Rat q = value_to_rational(v, what);
  require(is_integer(q), ErrorCode::ParseError, what + " must be an integer");
  return q.get_num().get_si();
}

RatVec value_to_vector(const Value& v, const std::string& what) {
  require(v.kind == Value::Kind::Array, ErrorCode::ParseError, what + " must be an array");
  RatVec out(static_cast<Eigen::Index>(v.items.size()));
  for (size_t i = 0; i < v.items.size(); ++i)
    out[static_cast<Eigen::Index>(i)] = value_to_rational(v.items[i], what);
  return out;
}

RatMat value_to_columns(const Value& v, const std::string& what) {
  require(v.kind == Value::Kind::Array, ErrorCode::ParseError, what + " must be an array of vectors");
  if (v.items.empty()) return RatMat();
  RatVec first = value_to_vector(v.items[0], what);
  RatMat out(first.size(), static_cast<Eigen::Index>(v.items.size()));
  out.col(0) = first;
  for (size_t j = 1; j < v.items.size(); ++j) {
    RatVec col = value_to_vector(v.items[j], what);
    require(col.size() == first.size(), ErrorCode::ParseError, what + ": ragged vector list");
    out.col(static_cast<Eigen::Index>(j)) = col;
  }
  return out;
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {"cone",    "lattice",   "boundary", "measure",
                                                 "rep",     "cocycles",  "commutant",
                                                 "fock",    "units",     "index",    "classify"};
  return names;
}

ScenarioConfig parse_scenario_config(const std::string& text, const std::string& sourceName) {
  Parser parser(text, sourceName);
  ConfigReader reader(parser.parse(), sourceName);

  ScenarioConfig config;
  config.rawText = text;
  ScenarioSpec& spec = config.scenario;

  if (const Value* v = reader.take("", "name")) {
    require(v->kind == Value::Kind::String, ErrorCode::ParseError, "name must be a string");
    spec.name = v->text;
  } else {
    spec.name = sourceName;
  }
  if (const Value* v = reader.take("", "multiplicity"))
    spec.multiplicity = static_cast<int>(value_to_int(*v, "multiplicity"));
  if (const Value* v = reader.take("", "seed"))
    spec.seed = static_cast<std::uint64_t>(value_to_int(*v, "seed"));
  if (const Value* v = reader.take("", "checks")) {
    require(v->kind == Value::Kind::Array, ErrorCode::ParseError, "checks must be an array");
    for (const Value& item : v->items) {
      require(item.kind == Value::Kind::String, ErrorCode::ParseError, "check names are strings");
      bool known = false;
      for (const std::string& name : known_checks()) known = known || name == item.text;
      require(known, ErrorCode::ParseError, "unknown check '" + item.text + "'");
      config.checks.push_back(item.text);
    }
  } else {
    config.checks = known_checks();
  }

  const Value* gens = reader.take("cone", "generators");
  require(gens != nullptr, ErrorCode::ParseError, "missing cone.generators");
  spec.coneGenerators = value_to_columns(*gens, "cone.generators");

  if (const Value* v = reader.take("functional", "e")) {
    if (v->kind == Value::Kind::String && v->text == "auto") {
      spec.functional = std::nullopt;
    } else {
      spec.functional = value_to_vector(*v, "functional.e");
    }
  }

  if (const Value* v = reader.take("lattice", "basis"))
    spec.latticeBasis = value_to_columns(*v, "lattice.basis");
  else
    spec.latticeBasis = RatMat(spec.coneGenerators.rows(), 0);

  if (const Value* v = reader.take("pspace", "translates"))
    spec.translates = value_to_columns(*v, "pspace.translates");

  const Value* yLo = reader.take("grid", "yLo");
  const Value* yHi = reader.take("grid", "yHi");
  const Value* h = reader.take("grid", "h");
  require(yLo && yHi && h, ErrorCode::ParseError, "grid needs yLo, yHi and h");
  spec.yLo = value_to_vector(*yLo, "grid.yLo");
  spec.yHi = value_to_vector(*yHi, "grid.yHi");
  spec.h = value_to_rational(*h, "grid.h");
  if (const Value* v = reader.take("grid", "M"))
    spec.torusSubdivisions = static_cast<int>(value_to_int(*v, "grid.M"));
  if (const Value* v = reader.take("grid", "ladder")) {
    require(v->kind == Value::Kind::Array, ErrorCode::ParseError, "grid.ladder must be an array");
    for (const Value& item : v->items)
      spec.ladderTops.push_back(value_to_rational(item, "grid.ladder"));
  }

  if (const Value* v = reader.take("expect", "boundary_compact")) {
    require(v->kind == Value::Kind::Bool, ErrorCode::ParseError, "expect.boundary_compact is a bool");
    config.expect.boundaryCompact = v->boolean;
  }
  if (const Value* v = reader.take("expect", "cocycle_dim"))
    config.expect.cocycleDim = static_cast<int>(value_to_int(*v, "expect.cocycle_dim"));
  if (const Value* v = reader.take("expect", "index"))
    config.expect.index = static_cast<int>(value_to_int(*v, "expect.index"));
  if (const Value* v = reader.take("expect", "commutant_dim"))
    config.expect.commutantDim = static_cast<int>(value_to_int(*v, "expect.commutant_dim"));
  if (const Value* v = reader.take("expect", "growth_slope"))
    config.expect.growthSlope = to_double(value_to_rational(*v, "expect.growth_slope"));

  reader.finish();
  return config;
}

ScenarioConfig load_scenario_config(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::ParseError, "cannot read config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_config(buffer.str(), path);
}

}  // namespace ccrlab
