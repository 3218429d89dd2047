#include "sll/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace sll {

using nlohmann::json;

namespace {

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

class Reader {
 public:
  explicit Reader(std::optional<Field> override_field) : override_(override_field) {}

  AlgebraDocument read(const json& root) {
    if (!root.is_object()) fail("", "document must be a JSON object");
    static const std::set<std::string> known{"cartan", "dim", "field", "meta", "parity", "products"};
    for (const auto& [key, value] : root.items()) {
      if (!known.contains(key)) fail(key, "unknown field");
    }
    field_ = override_.value_or(read_field(root));
    const std::size_t n = read_dim(root);
    std::vector<Parity> parity = read_parity(root, n);
    AlgebraDocument doc{Superalgebra(field_, parity), {}, {}};
    read_products(root, doc.algebra);
    if (root.contains("cartan")) read_cartan(root.at("cartan"), doc);
    if (root.contains("meta")) read_meta(root.at("meta"), doc.meta, n);
    return doc;
  }

 private:
  [[noreturn]] static void fail(const std::string& where, const std::string& what) {
    throw DocumentError(where.empty() ? "document" : where, what);
  }

  const json& require(const json& obj, const std::string& key) {
    if (!obj.contains(key)) fail(key, "missing required field");
    return obj.at(key);
  }

  Field read_field(const json& root) {
    const auto& f = require(root, "field");
    try {
      if (f.is_string() && f.get<std::string>() == "Q") return Field::rationals();
      if (f.is_object() && f.size() == 1 && f.contains("Fp") && f.at("Fp").is_number_unsigned()) {
        const auto p = f.at("Fp").get<std::uint64_t>();
        if (p > kMaxPrime) throw FieldError("modulus " + std::to_string(p) + " exceeds " + std::to_string(kMaxPrime));
        return Field::prime(static_cast<std::uint32_t>(p));
      }
    } catch (const FieldError& e) {
      fail("field", e.what());
    }
    fail("field", R"(expected "Q" or {"Fp": p})");
  }

  std::size_t read_dim(const json& root) {
    const auto& d = require(root, "dim");
    if (!d.is_number_unsigned()) fail("dim", "expected a non-negative integer");
    return d.get<std::size_t>();
  }

  std::vector<Parity> read_parity(const json& root, std::size_t n) {
    const auto& p = require(root, "parity");
    if (!p.is_array()) fail("parity", "expected an array of 0/1");
    if (p.size() != n) fail("parity", "has " + std::to_string(p.size()) + " entries but dim is " + std::to_string(n));
    std::vector<Parity> out;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& x = p[i];
      if (!x.is_number_unsigned() || x.get<std::uint64_t>() > 1) fail("parity[" + std::to_string(i) + "]", "expected 0 or 1");
      out.push_back(x.get<std::uint64_t>() == 0 ? Parity::Even : Parity::Odd);
    }
    return out;
  }

  std::size_t read_index(const json& x, const std::string& where, std::size_t n) {
    if (!x.is_number_unsigned()) fail(where, "expected a basis index");
    const auto v = x.get<std::uint64_t>();
    if (v >= n) fail(where, "index " + std::to_string(v) + " out of range for dim " + std::to_string(n));
    return static_cast<std::size_t>(v);
  }

  Scalar read_scalar(const json& x, const std::string& where) {
    try {
      if (x.is_string()) return Scalar::parse(field_, x.get<std::string>());
      if (x.is_number_integer()) return Scalar(field_, x.get<long>());
    } catch (const FieldError& e) {
      fail(where, e.what());
    }
    fail(where, "expected a scalar string such as \"3\" or \"-1/2\"");
  }

  void read_products(const json& root, Superalgebra& a) {
    const auto& ps = require(root, "products");
    if (!ps.is_array()) fail("products", "expected an array of [i, j, [[k, scalar], ...]]");
    const std::size_t n = a.dim();
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < ps.size(); ++e) {
      const std::string at = "products[" + std::to_string(e) + "]";
      const auto& entry = ps[e];
      if (!entry.is_array() || entry.size() != 3 || !entry[2].is_array()) fail(at, "expected [i, j, [[k, scalar], ...]]");
      const auto i = read_index(entry[0], at + "[0]", n);
      const auto j = read_index(entry[1], at + "[1]", n);
      if (!seen.insert({i, j}).second) {
        fail(at, "duplicate entry for (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      std::set<std::size_t> ks;
      for (std::size_t t = 0; t < entry[2].size(); ++t) {
        const std::string tat = at + "[2][" + std::to_string(t) + "]";
        const auto& term = entry[2][t];
        if (!term.is_array() || term.size() != 2) fail(tat, "expected [k, scalar]");
        const auto k = read_index(term[0], tat + "[0]", n);
        if (!ks.insert(k).second) fail(tat, "duplicate k = " + std::to_string(k));
        const Scalar c = read_scalar(term[1], tat + "[1]");
        if (c.is_zero()) continue;
        if (a.parity(k) != a.parity(i) + a.parity(j)) {
          fail(tat, "structure constant (" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) +
                        ") violates the grading");
        }
        a.set_constant(i, j, k, c);
      }
    }
  }

  void read_cartan(const json& c, AlgebraDocument& doc) {
    if (!c.is_array()) fail("cartan", "expected an array of coordinate vectors");
    const std::size_t n = doc.algebra.dim();
    for (std::size_t g = 0; g < c.size(); ++g) {
      const std::string at = "cartan[" + std::to_string(g) + "]";
      if (!c[g].is_array() || c[g].size() != n) fail(at, "expected " + std::to_string(n) + " coordinates");
      Vector v;
      for (std::size_t k = 0; k < n; ++k) v.push_back(read_scalar(c[g][k], at + "[" + std::to_string(k) + "]"));
      if (!is_zero(v) && !doc.algebra.grading().parity_of(v)) fail(at, "vector is not homogeneous");
      doc.cartan.push_back(std::move(v));
    }
  }

  void read_meta(const json& m, DocumentMeta& meta, std::size_t n) {
    if (!m.is_object()) fail("meta", "expected an object");
    for (const auto& [key, value] : m.items()) {
      if (key == "name") {
        if (!value.is_string()) fail("meta.name", "expected a string");
        meta.name = value.get<std::string>();
      } else if (key == "seed") {
        if (!value.is_number_unsigned()) fail("meta.seed", "expected a non-negative integer");
        meta.seed = value.get<std::uint64_t>();
      } else if (key == "basis") {
        if (!value.is_array() || value.size() != n) fail("meta.basis", "expected " + std::to_string(n) + " labels");
        for (const auto& l : value) {
          if (!l.is_string()) fail("meta.basis", "labels must be strings");
          meta.basis.push_back(l.get<std::string>());
        }
      } else {
        fail("meta." + key, "unknown field");
      }
    }
  }

  std::optional<Field> override_;
  Field field_;
};

json field_json(Field f) {
  if (f.is_rational()) return "Q";
  return json{{"Fp", f.modulus()}};
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

AlgebraDocument parse_document(const std::string& text, std::optional<Field> field_override) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(line_column(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
  return Reader(field_override).read(root);
}

AlgebraDocument load_document(const std::string& path, std::optional<Field> field_override) {
  return parse_document(read_file(path), field_override);
}

std::string dump_document(const AlgebraDocument& doc) {
  const auto& a = doc.algebra;
  json root;
  root["field"] = field_json(a.field());
  root["dim"] = a.dim();
  json parity = json::array();
  for (Parity p : a.grading().parities()) parity.push_back(index(p));
  root["parity"] = parity;
  // constants() is sorted by (i, j, k)
  std::map<std::pair<std::size_t, std::size_t>, json> rows;
  for (const auto& c : a.constants()) {
    auto& row = rows[{c.i, c.j}];
    if (row.is_null()) row = json::array();
    row.push_back(json::array({c.k, c.value.to_string()}));
  }
  json products = json::array();
  for (auto& [ij, terms] : rows) products.push_back(json::array({ij.first, ij.second, std::move(terms)}));
  root["products"] = products;
  if (!doc.cartan.empty()) {
    json cartan = json::array();
    for (const auto& v : doc.cartan) cartan.push_back(vector_json(v));
    root["cartan"] = cartan;
  }
  json meta = json::object();
  if (!doc.meta.name.empty()) meta["name"] = doc.meta.name;
  if (doc.meta.seed) meta["seed"] = *doc.meta.seed;
  if (!doc.meta.basis.empty()) meta["basis"] = doc.meta.basis;
  if (!meta.empty()) root["meta"] = meta;
  return root.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

void save_document(const AlgebraDocument& doc, const std::string& path) { write_file(path, dump_document(doc)); }

}  // namespace sll
