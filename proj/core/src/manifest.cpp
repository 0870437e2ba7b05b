#include "solvmf/manifest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace solvmf {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Expression grammars.

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at position " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "'");
  }

  Rational rational_token() {
    skip_ws();
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    std::size_t digits = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_, ++digits;
    if (digits == 0) fail("expected a rational");
    if (peek() == '/') {
      ++pos_;
      digits = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_, ++digits;
      if (digits == 0) fail("expected a denominator");
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
      fail("expected an identifier");
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool starts_rational() {
    skip_ws();
    if (std::isdigit(static_cast<unsigned char>(peek()))) return true;
    if (peek() == '-') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      bool digit = std::isdigit(static_cast<unsigned char>(peek()));
      pos_ = save;
      return digit;
    }
    return false;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// rational ('i')? | 'i'  with optional leading sign already consumed
GaussRat simple_gauss(Cursor& cur) {
  cur.skip_ws();
  if (cur.eat('i')) return GaussRat::i();
  Rational r = cur.rational_token();
  if (cur.eat('i')) return {Rational(0), r};
  return {r, Rational(0)};
}

GaussRat gauss_atom(Cursor& cur) {
  cur.skip_ws();
  if (cur.eat('(')) {
    GaussRat first = cur.eat('-') ? -simple_gauss(cur) : simple_gauss(cur);
    cur.skip_ws();
    GaussRat value = first;
    if (cur.eat('+'))
      value += simple_gauss(cur);
    else if (cur.eat('-'))
      value -= simple_gauss(cur);
    cur.skip_ws();
    if (!cur.eat(')')) cur.fail("expected ')'");
    return value;
  }
  return simple_gauss(cur);
}

Generator generator_token(Cursor& cur) {
  std::string name = cur.identifier();
  std::size_t digits = name.find_first_of("0123456789");
  if (digits == std::string::npos || digits == 0)
    throw std::invalid_argument("bad generator name '" + name + "'");
  std::string head = name.substr(0, digits);
  int index = 0;
  for (std::size_t i = digits; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      throw std::invalid_argument("bad generator name '" + name + "'");
    index = index * 10 + (name[i] - '0');
  }
  if (index < 1 || index > 32) throw std::invalid_argument("generator index out of range in '" + name + "'");
  if (head == "x") return {GenKind::x, index};
  if (head == "w") return {GenKind::w, index};
  if (head == "xb") return {GenKind::xb, index};
  if (head == "wb") return {GenKind::wb, index};
  throw std::invalid_argument("unknown generator '" + name + "' (expected x/w/xb/wb)");
}

Form monomial_expr(Cursor& cur) {
  Form f = Form::generator(generator_token(cur));
  while (true) {
    cur.skip_ws();
    if (!cur.eat('^')) break;
    f = wedge(f, Form::generator(generator_token(cur)));
  }
  return f;
}

}  // namespace

GaussRat parse_gauss(std::string_view text) {
  Cursor cur(text);
  cur.skip_ws();
  GaussRat value = cur.eat('-') ? -gauss_atom(cur) : gauss_atom(cur);
  if (!cur.done()) cur.fail("trailing characters after coefficient");
  return value;
}

FormalReal parse_formal_real(std::string_view text) {
  Cursor cur(text);
  FormalReal value;
  bool first = true;
  while (true) {
    cur.skip_ws();
    bool negative = false;
    if (!first) {
      if (cur.done()) break;
      if (cur.eat('+')) {
      } else if (cur.eat('-')) {
        negative = true;
      } else {
        cur.fail("expected '+' or '-'");
      }
    } else if (cur.eat('-')) {
      negative = true;
    }
    // term: rational ('*' atom)? | atom
    Rational coeff(1);
    bool have_coeff = false;
    if (cur.starts_rational()) {
      coeff = cur.rational_token();
      have_coeff = true;
    }
    cur.skip_ws();
    std::string atom;
    if (have_coeff) {
      if (cur.eat('*')) atom = cur.identifier();
    } else {
      atom = cur.identifier();
    }
    if (negative) coeff = -coeff;
    if (atom.empty())
      value += FormalReal(coeff);
    else if (atom == "pi")
      value += FormalReal::pi(coeff);
    else
      value += FormalReal::symbol(atom, coeff);
    first = false;
    if (cur.done()) break;
  }
  return value;
}

Form parse_form_expr(std::string_view text) {
  Cursor cur(text);
  cur.skip_ws();
  if (cur.eat('0')) {
    if (!cur.done()) cur.fail("trailing characters after 0");
    return Form::zero();
  }
  Form total;
  bool first = true;
  while (true) {
    cur.skip_ws();
    bool negative = false;
    if (!first) {
      if (cur.done()) break;
      if (cur.eat('+')) {
      } else if (cur.eat('-')) {
        negative = true;
      } else {
        cur.fail("expected '+' or '-'");
      }
    } else if (cur.eat('-')) {
      negative = true;
    }
    cur.skip_ws();
    GaussRat coeff(1);
    Form mono;
    if (cur.peek() == '(' || cur.starts_rational() || cur.peek() == 'i') {
      coeff = gauss_atom(cur);
      cur.skip_ws();
      if (cur.eat('*')) {
        mono = monomial_expr(cur);
      } else {
        mono = Form::unit();
      }
    } else {
      mono = monomial_expr(cur);
    }
    if (negative) coeff = -coeff;
    total += coeff * mono;
    first = false;
    if (cur.done()) break;
  }
  return total;
}

std::string to_expr_string(const Form& f) { return f.to_string(); }

// ---------------------------------------------------------------------------
// JSON schema.

namespace {

class SchemaReader {
 public:
  explicit SchemaReader(std::vector<ParseIssue>& errors) : errors_(errors) {}

  void error(const std::string& path, const std::string& message) {
    errors_.push_back({path, message});
  }

  bool require_keys(const json& obj, const std::string& path,
                    const std::vector<std::string>& required,
                    const std::vector<std::string>& optional = {}) {
    bool ok = true;
    for (const auto& key : required)
      if (!obj.contains(key)) {
        error(path, "missing required field '" + key + "'");
        ok = false;
      }
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      const std::string& key = it.key();
      bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                   std::find(optional.begin(), optional.end(), key) != optional.end();
      if (!known) {
        error(path + "/" + key, "unknown field");
        ok = false;
      }
    }
    return ok;
  }

  std::optional<int> read_int(const json& v, const std::string& path, int lo, int hi) {
    if (!v.is_number_integer()) {
      error(path, "expected an integer");
      return std::nullopt;
    }
    long value = v.get<long>();
    if (value < lo || value > hi) {
      error(path, "value " + std::to_string(value) + " outside [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
      return std::nullopt;
    }
    return static_cast<int>(value);
  }

  std::optional<Rational> read_rational(const json& v, const std::string& path) {
    try {
      if (v.is_number_integer()) return Rational(v.get<long>());
      if (v.is_string()) return parse_rational(v.get<std::string>());
    } catch (const std::exception& e) {
      error(path, e.what());
      return std::nullopt;
    }
    error(path, "expected a rational as integer or \"p/q\" string");
    return std::nullopt;
  }

  std::optional<GaussRat> read_gauss(const json& v, const std::string& path) {
    if (v.is_array()) {
      if (v.size() != 2) {
        error(path, "complex coefficient needs exactly [re, im]");
        return std::nullopt;
      }
      auto re = read_rational(v[0], path + "/0");
      auto im = read_rational(v[1], path + "/1");
      if (!re || !im) return std::nullopt;
      return GaussRat{*re, *im};
    }
    auto re = read_rational(v, path);
    if (!re) return std::nullopt;
    return GaussRat{*re, Rational(0)};
  }

 private:
  std::vector<ParseIssue>& errors_;
};

}  // namespace

std::string ManifestResult::summary() const {
  std::string out;
  for (const auto& e : errors) {
    if (!out.empty()) out += '\n';
    out += (e.path.empty() ? std::string("<document>") : e.path) + ": " + e.message;
  }
  return out;
}

ManifestResult parse_manifest(const std::string& text) {
  ManifestResult result;
  SchemaReader reader(result.errors);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    reader.error("", std::string("malformed JSON: ") + e.what());
    return result;
  }
  if (!doc.is_object()) {
    reader.error("", "manifest must be a JSON object");
    return result;
  }

  reader.require_keys(doc, "",
                      {"schema_version", "n", "m", "alphas", "nilpotent", "lattice",
                       "assert_nilmanifold_dolbeault"},
                      {"symbols"});
  if (!result.errors.empty()) {
    // keep going only when the skeleton is intact
    if (!doc.contains("n") || !doc.contains("m")) return result;
  }

  if (doc.contains("schema_version")) {
    auto v = reader.read_int(doc["schema_version"], "/schema_version", 1, 1);
    if (!v) return result;
  }

  ModelSpec spec;
  auto n = reader.read_int(doc["n"], "/n", 1, 16);
  auto m = reader.read_int(doc["m"], "/m", 0, 16);
  if (!n || !m) return result;
  spec.n = *n;
  spec.m = *m;

  if (doc.contains("symbols")) {
    const json& symbols = doc["symbols"];
    if (!symbols.is_array()) {
      reader.error("/symbols", "expected an array of names");
    } else {
      for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (!symbols[i].is_string() || symbols[i].get<std::string>().empty() ||
            symbols[i].get<std::string>() == "pi")
          reader.error("/symbols/" + std::to_string(i), "symbol must be a nonempty name other than 'pi'");
        else
          spec.symbols.push_back(symbols[i].get<std::string>());
      }
    }
  }

  if (doc.contains("alphas")) {
    const json& alphas = doc["alphas"];
    if (!alphas.is_array() || static_cast<int>(alphas.size()) != spec.m) {
      reader.error("/alphas", "expected an array of m = " + std::to_string(spec.m) + " weights");
    } else {
      for (int j = 0; j < spec.m; ++j) {
        const json& rows = alphas[j];
        std::string jpath = "/alphas/" + std::to_string(j);
        if (!rows.is_array() || static_cast<int>(rows.size()) != spec.n) {
          reader.error(jpath, "expected n = " + std::to_string(spec.n) +
                                  " exponent quadruples [a, b, c, d]");
          continue;
        }
        Character chi(spec.n);
        bool good = true;
        for (int i = 0; i < spec.n; ++i) {
          const json& quad = rows[i];
          std::string ipath = jpath + "/" + std::to_string(i);
          if (!quad.is_array() || quad.size() != 4) {
            reader.error(ipath, "expected an exponent quadruple [a, b, c, d]");
            good = false;
            continue;
          }
          auto a = reader.read_rational(quad[0], ipath + "/0");
          auto b = reader.read_rational(quad[1], ipath + "/1");
          auto c = reader.read_rational(quad[2], ipath + "/2");
          auto d = reader.read_rational(quad[3], ipath + "/3");
          if (!a || !b || !c || !d) {
            good = false;
            continue;
          }
          chi.coord(i) = {*a, *b, *c, *d};
        }
        if (good) spec.alphas.push_back(std::move(chi));
      }
    }
  }

  if (doc.contains("nilpotent")) {
    const json& nil = doc["nilpotent"];
    if (!nil.is_object() || nil.size() != 1 ||
        (!nil.contains("brackets") && !nil.contains("dbar_images"))) {
      reader.error("/nilpotent", "expected exactly one of 'brackets' or 'dbar_images'");
    } else if (nil.contains("brackets")) {
      const json& br = nil["brackets"];
      if (reader.require_keys(br, "/nilpotent/brackets", {}, {"C", "D", "E"})) {
        NilBrackets nb;
        nb.m = spec.m;
        auto read_triples = [&](const char* name, std::vector<BracketTriple>& dst) {
          if (!br.contains(name)) return;
          const json& arr = br[name];
          std::string apath = std::string("/nilpotent/brackets/") + name;
          if (!arr.is_array()) {
            reader.error(apath, "expected an array of [a, b, c, coeff] entries");
            return;
          }
          for (std::size_t t = 0; t < arr.size(); ++t) {
            const json& entry = arr[t];
            std::string tpath = apath + "/" + std::to_string(t);
            if (!entry.is_array() || entry.size() != 4) {
              reader.error(tpath, "expected [a, b, c, coeff]");
              continue;
            }
            auto a = reader.read_int(entry[0], tpath + "/0", 1, 32);
            auto b = reader.read_int(entry[1], tpath + "/1", 1, 32);
            auto c = reader.read_int(entry[2], tpath + "/2", 1, 32);
            auto coeff = reader.read_gauss(entry[3], tpath + "/3");
            if (a && b && c && coeff) dst.push_back({*a, *b, *c, *coeff});
          }
        };
        read_triples("C", nb.C);
        read_triples("D", nb.D);
        read_triples("E", nb.E);
        spec.brackets = std::move(nb);
      }
    } else {
      const json& imgs = nil["dbar_images"];
      if (!imgs.is_object()) {
        reader.error("/nilpotent/dbar_images", "expected an object keyed by w<j> / wb<j>");
      } else {
        std::map<Generator, Form> images;
        for (auto it = imgs.begin(); it != imgs.end(); ++it) {
          std::string ipath = "/nilpotent/dbar_images/" + it.key();
          if (!it.value().is_string()) {
            reader.error(ipath, "expected a form expression string");
            continue;
          }
          try {
            Cursor cur(it.key());
            Generator gen = generator_token(cur);
            if (!cur.done()) throw std::invalid_argument("trailing characters in generator name");
            images[gen] = parse_form_expr(it.value().get<std::string>());
          } catch (const std::exception& e) {
            reader.error(ipath, e.what());
          }
        }
        spec.dbar_images = std::move(images);
      }
    }
  }

  if (doc.contains("lattice")) {
    const json& lattice = doc["lattice"];
    if (!lattice.is_array()) {
      reader.error("/lattice", "expected an array of generators");
    } else if (static_cast<int>(lattice.size()) != 2 * spec.n) {
      reader.error("/lattice", "a lattice of C^" + std::to_string(spec.n) + " needs exactly " +
                                   std::to_string(2 * spec.n) + " generators, got " +
                                   std::to_string(lattice.size()));
    } else {
      for (std::size_t g = 0; g < lattice.size(); ++g) {
        const json& gen = lattice[g];
        std::string gpath = "/lattice/" + std::to_string(g);
        LatticeGen lg;
        if (!gen.is_array() || static_cast<int>(gen.size()) != 2 * spec.n) {
          reader.error(gpath, "expected 2n = " + std::to_string(2 * spec.n) +
                                  " coordinates (x1, y1, ..., xn, yn)");
          continue;
        }
        bool good = true;
        for (std::size_t c = 0; c < gen.size(); ++c) {
          std::string cpath = gpath + "/" + std::to_string(c);
          try {
            if (gen[c].is_number_integer())
              lg.coords.push_back(FormalReal(Rational(gen[c].get<long>())));
            else if (gen[c].is_string())
              lg.coords.push_back(parse_formal_real(gen[c].get<std::string>()));
            else
              throw std::invalid_argument("expected a formal-real string or integer");
          } catch (const std::exception& e) {
            reader.error(cpath, e.what());
            good = false;
          }
        }
        if (good) spec.lattice.push_back(std::move(lg));
      }
    }
  }

  if (doc.contains("assert_nilmanifold_dolbeault")) {
    const json& flag = doc["assert_nilmanifold_dolbeault"];
    if (!flag.is_boolean())
      reader.error("/assert_nilmanifold_dolbeault", "expected a boolean");
    else
      spec.nilmanifold_assumption_asserted = flag.get<bool>();
  } else {
    reader.error("/assert_nilmanifold_dolbeault",
                 "missing: the manifest must assert that the nilpotent fiber's Dolbeault "
                 "cohomology is computed by its Lie algebra");
  }

  if (result.errors.empty()) result.spec = std::move(spec);
  return result;
}

ManifestResult parse_manifest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ManifestResult result;
    result.errors.push_back({"", "cannot open manifest file '" + path + "'"});
    return result;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_manifest(buffer.str());
}

}  // namespace solvmf
