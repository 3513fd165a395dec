#include "h90/model_io.hpp"

#include <fstream>
#include <sstream>

namespace h90 {

ParseError::ParseError(std::size_t line, const std::string& field, const std::string& message)
    : Error("line " + std::to_string(line) + ", field '" + field + "': " + message),
      line_(line),
      field_(field) {}

namespace {

void write_rows(std::ostream& os, const Matrix& m) {
  if (m.cols() == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << int(m.at(r, c));
    os << '\n';
  }
}

void write_model_body(std::ostream& os, const ExtensionModel& m) {
  os << "h90-model 1\n";
  os << "p " << m.p() << '\n';
  os << "dimA " << m.dim_a() << '\n';
  os << "sigma\n";
  write_rows(os, m.a().sigma());
  os << "dimB " << m.dim_b() << '\n';
  os << "i\n";
  write_rows(os, m.i());
  os << "N\n";
  write_rows(os, m.n());
  os << "K_a " << m.k_a().dim() << '\n';
  write_rows(os, m.k_a().basis());
  os << "K_xi " << m.k_xi().dim() << '\n';
  write_rows(os, m.k_xi().basis());
  os << "flags a_sum_two_squares=" << int(m.flags().a_sum_two_squares)
     << " xi_is_norm=" << int(m.flags().xi_is_norm) << '\n';
  os << "provenance " << m.provenance() << '\n';
  os << "end\n";
}

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  /// Next non-blank, non-comment line split into tokens; throws at EOF.
  std::vector<std::string> next(const std::string& expecting) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      std::istringstream ss(raw);
      std::vector<std::string> toks;
      for (std::string t; ss >> t;) toks.push_back(t);
      if (!toks.empty()) {
        last_raw_ = raw;
        return toks;
      }
    }
    throw ParseError(line_ + 1, expecting, "unexpected end of input");
  }

  bool at_end() {
    while (true) {
      int c = in_.peek();
      if (c == EOF) return true;
      if (c == '\n' || c == ' ' || c == '\t' || c == '\r') {
        if (c == '\n') ++line_;
        in_.get();
        continue;
      }
      if (c == '#') {
        std::string skip;
        std::getline(in_, skip);
        ++line_;
        continue;
      }
      return false;
    }
  }

  std::size_t line() const noexcept { return line_; }
  const std::string& last_raw() const noexcept { return last_raw_; }

  [[noreturn]] void error(const std::string& field, const std::string& msg) const {
    throw ParseError(line_, field, msg);
  }

  long long integer(const std::string& tok, const std::string& field) const {
    try {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) error(field, "not an integer: '" + tok + "'");
      return v;
    } catch (const std::logic_error&) {
      error(field, "not an integer: '" + tok + "'");
    }
  }

  std::size_t count(const std::string& tok, const std::string& field) const {
    long long v = integer(tok, field);
    if (v < 0 || v > 4096) error(field, "dimension out of range: " + tok);
    return static_cast<std::size_t>(v);
  }

  /// Reads `keyword <args...>` and returns the args.
  std::vector<std::string> keyed(const std::string& keyword, std::size_t nargs) {
    auto toks = next(keyword);
    if (toks[0] != keyword) error(keyword, "expected '" + keyword + "', found '" + toks[0] + "'");
    if (toks.size() != nargs + 1)
      error(keyword, "expected " + std::to_string(nargs) + " argument(s)");
    return {toks.begin() + 1, toks.end()};
  }

  Vec residues(const std::vector<std::string>& toks, std::size_t expected, int p,
               const std::string& field) const {
    if (toks.size() != expected)
      error(field, "expected " + std::to_string(expected) + " entries, found " +
                       std::to_string(toks.size()));
    Vec v;
    for (const auto& t : toks) {
      long long x = integer(t, field);
      if (x < 0 || x >= p) error(field, "entry " + t + " is not a residue mod " + std::to_string(p));
      v.push_back(static_cast<Elem>(x));
    }
    return v;
  }

  Matrix matrix(Field f, std::size_t rows, std::size_t cols, const std::string& field) {
    Matrix m(f, rows, cols);
    if (cols == 0) return m;
    for (std::size_t r = 0; r < rows; ++r) {
      auto v = residues(next(field), cols, f.p(), field);
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, v[c]);
    }
    return m;
  }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
  std::string last_raw_;
};

ExtensionModel read_model(Reader& rd) {
  auto header = rd.next("h90-model");
  if (header.size() != 2 || header[0] != "h90-model") rd.error("h90-model", "missing header");
  if (header[1] != "1") rd.error("h90-model", "unsupported version " + header[1]);

  long long p = rd.integer(rd.keyed("p", 1)[0], "p");
  if (!is_supported_prime(static_cast<int>(p)))
    rd.error("p", "unsupported prime " + std::to_string(p));
  Field f(static_cast<int>(p));

  std::size_t da = rd.count(rd.keyed("dimA", 1)[0], "dimA");
  rd.keyed("sigma", 0);
  Matrix sigma = rd.matrix(f, da, da, "sigma");
  std::size_t db = rd.count(rd.keyed("dimB", 1)[0], "dimB");
  rd.keyed("i", 0);
  Matrix i = rd.matrix(f, da, db, "i");
  rd.keyed("N", 0);
  Matrix n = rd.matrix(f, db, da, "N");

  auto read_subspace = [&](const std::string& key) {
    std::size_t k = rd.count(rd.keyed(key, 1)[0], key);
    if (k > db) rd.error(key, "more basis rows than dimB");
    if (db == 0) return Subspace(f, 0);
    Matrix rows = rd.matrix(f, k, db, key);
    Subspace s = Subspace::row_space(rows);
    if (s.dim() != k) rd.error(key, "basis rows are linearly dependent");
    return s;
  };
  Subspace k_a = read_subspace("K_a");
  Subspace k_xi = read_subspace("K_xi");

  auto flag_toks = rd.next("flags");
  if (flag_toks[0] != "flags") rd.error("flags", "expected 'flags'");
  ModelFlags flags;
  for (std::size_t t = 1; t < flag_toks.size(); ++t) {
    const auto& tok = flag_toks[t];
    auto eq = tok.find('=');
    if (eq == std::string::npos) rd.error("flags", "expected name=0|1, found '" + tok + "'");
    std::string name = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (val != "0" && val != "1") rd.error("flags", "flag value must be 0 or 1");
    if (name == "a_sum_two_squares")
      flags.a_sum_two_squares = val == "1";
    else if (name == "xi_is_norm")
      flags.xi_is_norm = val == "1";
    else
      rd.error("flags", "unknown flag '" + name + "'");
  }

  auto prov = rd.next("provenance");
  if (prov[0] != "provenance") rd.error("provenance", "expected 'provenance'");
  std::string raw = rd.last_raw();
  auto pos = raw.find("provenance") + std::string("provenance").size();
  std::string text = raw.substr(pos);
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t\r");
  text = first == std::string::npos ? "" : text.substr(first, last - first + 1);

  auto end = rd.next("end");
  if (end.size() != 1 || end[0] != "end") rd.error("end", "expected 'end'");

  auto check = validate_action(sigma);
  if (!check.ok) rd.error("sigma", check.message);
  try {
    return ExtensionModel(CyclicModule(std::move(sigma)), db, std::move(i), std::move(n),
                          std::move(k_a), std::move(k_xi), flags, text);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    rd.error("model", e.what());
  }
}

}  // namespace

std::string serialize_model(const ExtensionModel& m) {
  std::ostringstream os;
  write_model_body(os, m);
  return os.str();
}

ExtensionModel parse_model(std::istream& in) {
  Reader rd(in);
  auto m = read_model(rd);
  if (!rd.at_end()) throw ParseError(rd.line() + 1, "end", "trailing content after model record");
  return m;
}

ExtensionModel parse_model(const std::string& text) {
  std::istringstream in(text);
  return parse_model(in);
}

ExtensionModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file " + path);
  return parse_model(in);
}

void save_model(const ExtensionModel& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write model file " + path);
  out << serialize_model(m);
}

std::string serialize_tower(const DegreeTower& t) {
  std::ostringstream os;
  os << "h90-tower 1\n";
  os << "backend " << t.backend << '\n';
  os << "p " << t.p << '\n';
  os << "n_max " << t.n_max << '\n';
  os << "cd " << t.cd_string() << '\n';
  os << "b_dims";
  for (auto d : t.b_dims) os << ' ' << d;
  os << '\n';
  os << "root_class";
  for (auto e : t.root_class) os << ' ' << int(e);
  os << '\n';
  for (const auto& note : t.notes) os << "note " << note << '\n';
  auto cups = [&](const char* key, const std::vector<Matrix>& maps) {
    for (std::size_t k = 0; k < maps.size(); ++k) {
      os << key << ' ' << k + 1 << ' ' << maps[k].rows() << ' ' << maps[k].cols() << '\n';
      write_rows(os, maps[k]);
    }
  };
  cups("cup_a", t.cup_a);
  cups("cup_xi", t.cup_xi);
  for (int n = 1; n <= t.n_max; ++n) {
    os << "degree " << n << '\n';
    write_model_body(os, t.model(n));
  }
  os << "end-tower\n";
  return os.str();
}

DegreeTower parse_tower(std::istream& in) {
  Reader rd(in);
  auto header = rd.next("h90-tower");
  if (header.size() != 2 || header[0] != "h90-tower" || header[1] != "1")
    rd.error("h90-tower", "missing or unsupported header");
  DegreeTower t;
  {
    rd.next("backend");
    std::string raw = rd.last_raw();
    auto pos = raw.find("backend") + 7;
    auto first = raw.find_first_not_of(" \t", pos);
    auto last = raw.find_last_not_of(" \t\r");
    t.backend = first == std::string::npos ? "" : raw.substr(first, last - first + 1);
  }
  t.p = static_cast<int>(rd.integer(rd.keyed("p", 1)[0], "p"));
  if (!is_supported_prime(t.p)) rd.error("p", "unsupported prime");
  Field f(t.p);
  t.n_max = static_cast<int>(rd.count(rd.keyed("n_max", 1)[0], "n_max"));
  auto cd = rd.keyed("cd", 1)[0];
  if (cd != "inf") t.cd = static_cast<int>(rd.count(cd, "cd"));
  auto dims = rd.next("b_dims");
  if (dims[0] != "b_dims" || dims.size() != static_cast<std::size_t>(t.n_max) + 3)
    rd.error("b_dims", "expected n_max+2 dimensions");
  for (std::size_t k = 1; k < dims.size(); ++k) t.b_dims.push_back(rd.count(dims[k], "b_dims"));
  auto root = rd.next("root_class");
  if (root[0] != "root_class") rd.error("root_class", "expected 'root_class'");
  t.root_class = rd.residues({root.begin() + 1, root.end()}, root.size() - 1, t.p, "root_class");

  auto toks = rd.next("cup_a");
  while (toks[0] == "note") {
    std::string raw = rd.last_raw();
    auto first = raw.find_first_not_of(" \t", raw.find("note") + 4);
    auto last = raw.find_last_not_of(" \t\r");
    t.notes.push_back(first == std::string::npos ? "" : raw.substr(first, last - first + 1));
    toks = rd.next("cup_a");
  }
  auto read_cups = [&](const std::string& key, std::vector<Matrix>& out) {
    for (int n = 1; n <= t.n_max + 1; ++n) {
      if (n > 1) toks = rd.next(key);
      if (toks[0] != key || toks.size() != 4) rd.error(key, "expected '" + key + " n rows cols'");
      if (rd.integer(toks[1], key) != n) rd.error(key, "degrees must appear in order");
      std::size_t rows = rd.count(toks[2], key), cols = rd.count(toks[3], key);
      auto un = static_cast<std::size_t>(n);
      if (rows != t.b_dims[un] || cols != t.b_dims[un - 1])
        rd.error(key, "shape must be dim B_n x dim B_(n-1)");
      out.push_back(rd.matrix(f, rows, cols, key));
    }
  };
  read_cups("cup_a", t.cup_a);
  toks = rd.next("cup_xi");
  read_cups("cup_xi", t.cup_xi);
  for (int n = 1; n <= t.n_max; ++n) {
    auto deg = rd.keyed("degree", 1);
    if (rd.integer(deg[0], "degree") != n) rd.error("degree", "degrees must appear in order");
    t.models.push_back(read_model(rd));
    if (t.models.back().p() != t.p) rd.error("degree", "model prime differs from tower prime");
  }
  auto end = rd.next("end-tower");
  if (end[0] != "end-tower") rd.error("end-tower", "expected 'end-tower'");
  return t;
}

DegreeTower parse_tower(const std::string& text) {
  std::istringstream in(text);
  return parse_tower(in);
}

}  // namespace h90
