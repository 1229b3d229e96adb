#include "weylchar/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "weylchar/errors.hpp"

namespace weylchar {

// ------------------------------------------------------------------ parsing

namespace {

class DomBuilder {
 public:
  using number_integer_t = Json::number_integer_t;
  using number_unsigned_t = Json::number_unsigned_t;
  using number_float_t = Json::number_float_t;
  using string_t = Json::string_t;
  using binary_t = Json::binary_t;

  bool null() { return put(Json(nullptr)); }
  bool boolean(bool v) { return put(Json(v)); }
  bool number_integer(number_integer_t v) { return put(Json(v)); }
  bool number_unsigned(number_unsigned_t v) { return put(Json(v)); }
  bool number_float(number_float_t, const string_t& lexeme) {
    // The lexer reports integers that overflow 64 bits as floats.
    std::string_view digits(lexeme);
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      error_ = "non-integer number " + lexeme;
      return false;
    }
    return put(Json(std::string(big_integer_tag) + lexeme));
  }
  bool string(string_t& v) { return put(Json(v)); }
  bool binary(binary_t&) {
    error_ = "binary values are not supported";
    return false;
  }
  bool start_object(std::size_t) {
    Json* slot = place(Json::object());
    stack_.push_back(slot);
    return true;
  }
  bool key(string_t& k) {
    key_ = k;
    return true;
  }
  bool end_object() {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) {
    Json* slot = place(Json::array());
    stack_.push_back(slot);
    return true;
  }
  bool end_array() {
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) {
    error_ = ex.what();
    return false;
  }

  Json& root() { return root_; }
  const std::string& error() const { return error_; }

 private:
  bool put(Json v) {
    place(std::move(v));
    return true;
  }
  Json* place(Json v) {
    if (stack_.empty()) {
      root_ = std::move(v);
      return &root_;
    }
    Json& top = *stack_.back();
    if (top.is_array()) {
      top.push_back(std::move(v));
      return &top.back();
    }
    Json& slot = top[key_];
    slot = std::move(v);
    return &slot;
  }

  Json root_;
  std::vector<Json*> stack_;
  std::string key_;
  std::string error_;
};

bool is_big(const Json& j) {
  return j.is_string() && j.get_ref<const std::string&>().rfind(big_integer_tag, 0) == 0;
}

}  // namespace

Json parse_json(std::string_view text) {
  DomBuilder builder;
  if (!Json::sax_parse(text.begin(), text.end(), &builder))
    throw InputError("malformed JSON: " + (builder.error().empty() ? std::string("parse failed") : builder.error()));
  return std::move(builder.root());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (is_big(j)) return BigInt(j.get_ref<const std::string&>().substr(big_integer_tag.size()));
  throw InputError("expected an integer, got " + j.dump());
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string("expected an integer for ") + what);
  auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw InputError(std::string(what) + " out of range");
  return static_cast<int>(v);
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("a partition must be a JSON array of integers");
  std::vector<int> parts;
  for (const auto& x : j) parts.push_back(int_from_json(x, "partition part"));
  return Partition(std::move(parts));
}

MultiPartition multipartition_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("a multipartition must be a nonempty JSON array of arrays");
  std::vector<Partition> comps;
  for (const auto& c : j) comps.push_back(partition_from_json(c));
  return MultiPartition(std::move(comps));
}

MultiPartition parse_multipartition(std::string_view text) { return multipartition_from_json(parse_json(text)); }

MultiComposition multicomposition_from_json(const Json& j, const ShapeBound& bound) {
  if (!j.is_array() || static_cast<int>(j.size()) != bound.r())
    throw InputError("a multicomposition must be an array of " + std::to_string(bound.r()) + " rows");
  std::vector<std::vector<int>> rows;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_array() || static_cast<int>(j[k].size()) != bound[k])
      throw InputError("multicomposition row " + std::to_string(k + 1) + " must have " + std::to_string(bound[k]) +
                       " entries");
    std::vector<int> row;
    for (const auto& x : j[k]) row.push_back(int_from_json(x, "composition entry"));
    rows.push_back(std::move(row));
  }
  return MultiComposition(std::move(rows));
}

namespace {
std::vector<int> parse_int_list(std::string_view text, const char* what) {
  std::vector<int> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }) ||
        item.size() > 9)
      throw InputError(std::string("malformed ") + what + ": " + std::string(text));
    out.push_back(std::stoi(item));
  }
  if (out.empty() || (!text.empty() && text.back() == ','))
    throw InputError(std::string("malformed ") + what + ": " + std::string(text));
  return out;
}
}  // namespace

ShapeBound parse_bound(std::string_view text) { return ShapeBound(parse_int_list(text, "row bound list")); }

Grouping parse_grouping(std::string_view text) { return Grouping(parse_int_list(text, "grouping")); }

// ------------------------------------------------------------------ to JSON

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const MultiPartition& mp) {
  Json j = Json::array();
  for (const auto& c : mp.components()) j.push_back(to_json(c));
  return j;
}

Json to_json(const MultiComposition& mc) { return Json(mc.rows()); }

Json to_json(const CrystalWord& w) {
  Json j = Json::array();
  for (const auto& word : w.letters) {
    Json row = Json::array();
    for (int a : word) row.push_back(a + 1);
    j.push_back(std::move(row));
  }
  return j;
}

Json to_json(const Tableau& t) {
  Json entries = Json::array();
  for (std::size_t p = 0; p < t.size(); ++p) {
    const Cell& x = t.cells()[p];
    const Entry& e = t.entries()[p];
    entries.push_back(Json::array({x.row + 1, x.col + 1, x.comp + 1, e.letter + 1, e.comp + 1}));
  }
  Json j = Json::object();
  j["shape"] = to_json(t.shape().outer());
  j["inner"] = to_json(t.shape().inner());
  j["entries"] = std::move(entries);
  return j;
}

Tableau tableau_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("entries"))
    throw InputError("a tableau must be an object with shape and entries");
  MultiPartition outer = multipartition_from_json(j.at("shape"));
  MultiPartition inner = j.contains("inner") ? multipartition_from_json(j.at("inner")) : MultiPartition::empty(outer.r());
  SkewShape shape(outer, inner);
  const auto cells = skew_cells(shape);
  std::map<std::tuple<int, int, int>, Entry> by_cell;
  const Json& es = j.at("entries");
  if (!es.is_array()) throw InputError("tableau entries must be an array");
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 5) throw InputError("tableau entry must be [i,j,k,a,c]");
    int i = int_from_json(e[0], "row") - 1, c = int_from_json(e[1], "column") - 1, k = int_from_json(e[2], "component") - 1;
    int a = int_from_json(e[3], "letter") - 1, ec = int_from_json(e[4], "alphabet") - 1;
    if (!shape.contains(Cell{i, c, k})) throw InputError("tableau entry outside the shape");
    if (!by_cell.emplace(std::make_tuple(i, c, k), Entry{a, ec}).second) throw InputError("tableau cell given twice");
  }
  if (by_cell.size() != cells.size()) throw InputError("tableau does not fill every cell");
  std::vector<Entry> entries;
  for (const auto& x : cells) entries.push_back(by_cell.at(std::make_tuple(x.row, x.col, x.comp)));
  return Tableau(shape, std::move(entries));
}

CrystalWord word_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("a crystal word must be a nonempty array of letter arrays");
  CrystalWord w;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError("a crystal word component must be an array");
    std::vector<int> letters;
    for (const auto& x : row) {
      int a = int_from_json(x, "letter");
      if (a < 1) throw InputError("letters are numbered from 1");
      letters.push_back(a - 1);
    }
    w.letters.push_back(std::move(letters));
  }
  return w;
}

std::string dump(const Json& j) { return j.dump(); }

// ------------------------------------------------------------------ matrices

namespace {
std::string header_json(int n, const ShapeBound& bound, const std::vector<MultiPartition>& order) {
  Json order_json = Json::array();
  for (const auto& mp : order) order_json.push_back(to_json(mp));
  return "{\"n\":" + std::to_string(n) + ",\"r\":" + std::to_string(bound.r()) + ",\"m\":" + Json(bound.values()).dump() +
         ",\"order\":" + order_json.dump();
}

template <class T>
std::string rows_json(const Matrix<T>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ',';
      s += to_decimal(m(i, j));
    }
    s += ']';
  }
  return s + "]";
}
}  // namespace

std::string write_matrix_json(const IndexedMatrix& m) {
  return header_json(m.n, m.bound, m.order) + ",\"rows\":" + rows_json(m.values) + "}";
}

std::string write_matrix_json(const BetaMatrix& b) { return write_matrix_json(to_indexed(b)); }

std::string write_matrix_tsv(const IndexedMatrix& m) {
  std::string s = "index";
  for (const auto& mp : m.order) s += "\t" + to_json(mp).dump();
  s += "\n";
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    s += to_json(m.order[i]).dump();
    for (std::size_t j = 0; j < m.dimension(); ++j) s += "\t" + to_decimal(m.values(i, j));
    s += "\n";
  }
  return s;
}

IndexedMatrix parse_matrix(std::string_view text) {
  Json j = parse_json(text);
  if (!j.is_object()) throw InputError("a matrix file must hold a JSON object");
  for (const char* key : {"n", "r", "m", "order", "rows"})
    if (!j.contains(key)) throw InputError(std::string("matrix file lacks the field ") + key);
  IndexedMatrix m;
  m.n = int_from_json(j["n"], "n");
  const int r = int_from_json(j["r"], "r");
  if (!j["m"].is_array()) throw InputError("m must be an array");
  std::vector<int> bounds;
  for (const auto& x : j["m"]) bounds.push_back(int_from_json(x, "m"));
  m.bound = ShapeBound(bounds);
  if (m.bound.r() != r) throw InputError("m has " + std::to_string(m.bound.r()) + " entries but r = " + std::to_string(r));
  if (!j["order"].is_array()) throw InputError("order must be an array");
  for (const auto& mp : j["order"]) m.order.push_back(multipartition_from_json(mp));
  if (m.order != enumerate_multipartitions(m.n, m.bound))
    throw InputError("matrix order is not the canonical order of the multipartitions of n");
  const auto dim = m.order.size();
  const Json& rows = j["rows"];
  if (!rows.is_array() || rows.size() != dim) throw InputError("matrix must have one row per index entry");
  m.values = Matrix<BigInt>(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!rows[i].is_array() || rows[i].size() != dim) throw InputError("matrix row " + std::to_string(i + 1) + " has the wrong length");
    for (std::size_t jj = 0; jj < dim; ++jj) m.values(i, jj) = bigint_from_json(rows[i][jj]);
  }
  return m;
}

// -------------------------------------------------------------- expansions

std::string write_expansion(const SchurExpansion& e) {
  std::string s = "{\"basis\":\"" + to_string(e.basis()) + "\",\"degree\":" + std::to_string(e.degree()) + ",\"terms\":[";
  bool first = true;
  for (const auto& [index, c] : e.sorted_terms()) {
    if (!first) s += ',';
    first = false;
    s += "{\"index\":" + to_json(index).dump() + ",\"coeff\":" + to_decimal(c) + "}";
  }
  return s + "]}";
}

std::string write_expansion(const MonomialPoly& p) {
  std::string s = "{\"basis\":\"monomial\",\"degree\":" + std::to_string(p.degree()) +
                  ",\"m\":" + Json(p.bound().values()).dump() + ",\"terms\":[";
  bool first = true;
  for (const auto& [index, c] : p.sorted_terms()) {
    if (!first) s += ',';
    first = false;
    s += "{\"index\":" + to_json(index).dump() + ",\"coeff\":" + to_decimal(c) + "}";
  }
  return s + "]}";
}

namespace {
std::string hits_json(const std::vector<ConjectureHit>& hits) {
  std::string s = "[";
  for (std::size_t i = 0; i < hits.size(); ++i) {
    const auto& h = hits[i];
    if (i) s += ',';
    s += "{\"lambda\":" + to_json(h.la).dump() + ",\"mu\":" + to_json(h.mu).dump() + ",\"nu\":" + to_json(h.nu).dump() +
         ",\"coeff\":" + to_decimal(h.coeff) + "}";
  }
  return s + "]";
}
}  // namespace

std::string write_conjecture_report(const ConjectureReport& report) {
  return "{\"n_max\":" + std::to_string(report.n_max) + ",\"r\":" + std::to_string(report.r) +
         ",\"scanned\":" + std::to_string(report.scanned) + ",\"c1_violations\":" + hits_json(report.c1_violations) +
         ",\"c2_violations\":" + hits_json(report.c2_violations) + "}";
}

std::string write_factorization_report(const FactorizationReport& report, const IndexedMatrix& index) {
  std::string s = "{\"dimension\":" + std::to_string(report.dimension) + ",\"residual\":" + to_decimal(report.residual) +
                  ",\"holds\":" + (report.holds() ? "true" : "false") + ",\"warnings\":" + Json(report.warnings).dump() +
                  ",\"block_mismatches\":[";
  for (std::size_t i = 0; i < report.block_mismatches.size(); ++i) {
    const auto& b = report.block_mismatches[i];
    if (i) s += ',';
    s += "{\"lambda\":" + to_json(index.order[b.row]).dump() + ",\"mu\":" + to_json(index.order[b.col]).dump() +
         ",\"d\":" + to_decimal(b.d) + ",\"dbar\":" + to_decimal(b.dbar) + "}";
  }
  return s + "]}";
}

// ------------------------------------------------------------------ crystals

namespace {
std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace

std::string write_crystal_dot(const CrystalGraph& g) {
  std::string s = "digraph crystal {\n";
  for (std::size_t c = 0; c < g.components.size(); ++c) {
    const auto& comp = g.components[c];
    s += "  subgraph cluster_" + std::to_string(c) + " {\n    label=\"" + comp.highest_weight.str() + "\";\n";
    for (std::size_t v : comp.members)
      s += "    v" + std::to_string(v) + " [label=\"" + dot_escape(to_json(g.vertices[v]).dump()) + "\"];\n";
    s += "  }\n";
  }
  for (const auto& e : g.edges)
    s += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) + " [label=\"f(" + std::to_string(e.op.i + 1) +
         "," + std::to_string(e.op.comp + 1) + ")\"];\n";
  return s + "}\n";
}

std::string write_crystal_summary(const CrystalGraph& g) {
  Json j = Json::array();
  for (const auto& c : g.components) {
    Json item = Json::object();
    item["highest_weight"] = to_json(c.highest_weight);
    item["size"] = c.size();
    j.push_back(std::move(item));
  }
  return j.dump();
}

}  // namespace weylchar
