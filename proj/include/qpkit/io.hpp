#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qpkit/common.hpp"
#include "qpkit/matrix.hpp"
#include "qpkit/path.hpp"
#include "qpkit/quiver.hpp"
#include "qpkit/ratmat.hpp"
#include "qpkit/rep.hpp"

namespace qpkit {

// Text formats, all deterministic round-trips:
//   matrix:     "m n" then m rows of n integers
//   quiver:     "n" then one "id tail head" line per arrow (1-based vertices)
//   potential:  one "coeff  word" line per term, word = arrow ids joined by
//               '*', leftmost factor applied last
//   rep:        "dims ...", "dec ...", then per arrow (stored order) a line
//               "arrow id" followed by its matrix rows with p/q entries

namespace detail {

inline std::string next_data_line(std::istream& in, const std::string& what) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  }
  throw error("unexpected end of input while reading " + what);
}

inline Rat parse_rat(const std::string& tok) {
  const auto slash = tok.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(tok));
    const Int num(tok.substr(0, slash));
    const Int den(tok.substr(slash + 1));
    QPKIT_REQUIRE(den != 0, "parse_rat: zero denominator in '" + tok + "'");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw error("parse_rat: bad rational '" + tok + "'");
  }
}

}  // namespace detail

inline void write_matrix(std::ostream& out, const IntMat& m) {
  out << m.rows << ' ' << m.cols << '\n';
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) out << (j ? " " : "") << m.at(i, j);
    out << '\n';
  }
}

inline IntMat read_matrix(std::istream& in) {
  std::istringstream head(detail::next_data_line(in, "matrix header"));
  int rows = 0, cols = 0;
  QPKIT_REQUIRE(static_cast<bool>(head >> rows >> cols) && rows >= 0 && cols >= 0,
                "read_matrix: bad header line");
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    std::istringstream row(detail::next_data_line(in, "matrix row"));
    for (int j = 0; j < cols; ++j) {
      QPKIT_REQUIRE(static_cast<bool>(row >> m.at(i, j)),
                    "read_matrix: short row " + std::to_string(i + 1));
    }
  }
  return m;
}

inline void write_quiver(std::ostream& out, const Quiver& Q) {
  out << Q.vertex_count() << '\n';
  for (int a = 0; a < Q.arrow_count(); ++a) {
    const Arrow& ar = Q.arrow(a);
    out << ar.id << ' ' << (ar.tail + 1) << ' ' << (ar.head + 1) << '\n';
  }
}

inline Quiver read_quiver(std::istream& in) {
  std::istringstream head(detail::next_data_line(in, "quiver header"));
  int n = 0;
  QPKIT_REQUIRE(static_cast<bool>(head >> n) && n >= 1,
                "read_quiver: bad vertex count");
  Quiver Q(n);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    std::string id;
    int tail = 0, headv = 0;
    QPKIT_REQUIRE(static_cast<bool>(row >> id >> tail >> headv),
                  "read_quiver: bad arrow line '" + line + "'");
    QPKIT_REQUIRE(tail >= 1 && tail <= n && headv >= 1 && headv <= n,
                  "read_quiver: vertex out of range in '" + line + "'");
    Q.add_arrow(id, tail - 1, headv - 1);
  }
  return Q;
}

inline std::string path_to_text(const Quiver& Q, const Path& p) {
  QPKIT_REQUIRE(!p.is_lazy(), "path_to_text: lazy path has no arrow word");
  std::string out;
  for (size_t i = 0; i < p.word.size(); ++i) {
    if (i) out += '*';
    out += Q.arrow(p.word[i]).id;
  }
  return out;
}

inline Path path_from_text(const Quiver& Q, const std::string& text) {
  std::vector<int> word;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, '*')) {
    QPKIT_REQUIRE(!tok.empty(), "path_from_text: empty factor in '" + text + "'");
    word.push_back(Q.arrow_index(tok));
  }
  QPKIT_REQUIRE(!word.empty(), "path_from_text: empty word");
  Path p{word};
  QPKIT_REQUIRE(path_is_valid(Q, p),
                "path_from_text: factors do not compose in '" + text + "'");
  return p;
}

inline void write_potential(std::ostream& out, const Quiver& Q,
                            const PathVector& S) {
  for (const auto& [p, c] : S) {
    out << rat_to_string(c) << "  " << path_to_text(Q, p) << '\n';
  }
}

inline PathVector read_potential(std::istream& in, const Quiver& Q) {
  PathVector S;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    std::string coeff, word;
    QPKIT_REQUIRE(static_cast<bool>(row >> coeff >> word),
                  "read_potential: bad term line '" + line + "'");
    pv_add_term(S, path_from_text(Q, word), detail::parse_rat(coeff));
  }
  return S;
}

inline void write_rep(std::ostream& out, const Quiver& Q,
                      const DecoratedRep& M) {
  validate_rep_shapes(Q, M);
  out << "dims";
  for (int d : M.dims) out << ' ' << d;
  out << '\n' << "dec";
  for (int v : M.dec_dims) out << ' ' << v;
  out << '\n';
  for (int a = 0; a < Q.arrow_count(); ++a) {
    out << "arrow " << Q.arrow(a).id << '\n';
    const RatMat& m = M.arrow_maps[a];
    if (m.cols == 0) continue;
    for (int r = 0; r < m.rows; ++r) {
      for (int c = 0; c < m.cols; ++c)
        out << (c ? " " : "") << rat_to_string(m.at(r, c));
      out << '\n';
    }
  }
}

inline DecoratedRep read_rep(std::istream& in, const Quiver& Q) {
  const int n = Q.vertex_count();
  DecoratedRep M;
  {
    std::istringstream row(detail::next_data_line(in, "rep dims"));
    std::string tag;
    QPKIT_REQUIRE(static_cast<bool>(row >> tag) && tag == "dims",
                  "read_rep: expected 'dims' line");
    M.dims.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      QPKIT_REQUIRE(static_cast<bool>(row >> M.dims[i]) && M.dims[i] >= 0,
                    "read_rep: bad dims line");
  }
  {
    std::istringstream row(detail::next_data_line(in, "rep dec"));
    std::string tag;
    QPKIT_REQUIRE(static_cast<bool>(row >> tag) && tag == "dec",
                  "read_rep: expected 'dec' line");
    M.dec_dims.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      QPKIT_REQUIRE(static_cast<bool>(row >> M.dec_dims[i]) && M.dec_dims[i] >= 0,
                    "read_rep: bad dec line");
  }
  for (int a = 0; a < Q.arrow_count(); ++a) {
    std::istringstream row(detail::next_data_line(in, "rep arrow header"));
    std::string tag, id;
    QPKIT_REQUIRE(static_cast<bool>(row >> tag >> id) && tag == "arrow",
                  "read_rep: expected 'arrow' line");
    QPKIT_REQUIRE(id == Q.arrow(a).id,
                  "read_rep: arrow order mismatch, expected " + Q.arrow(a).id +
                      " got " + id);
    const Arrow& ar = Q.arrow(a);
    RatMat m(M.dims[ar.head], M.dims[ar.tail]);
    if (m.cols > 0) {
      for (int r = 0; r < m.rows; ++r) {
        std::istringstream data(detail::next_data_line(in, "rep matrix row"));
        for (int c = 0; c < m.cols; ++c) {
          std::string tok;
          QPKIT_REQUIRE(static_cast<bool>(data >> tok),
                        "read_rep: short matrix row for arrow " + ar.id);
          m.at(r, c) = detail::parse_rat(tok);
        }
      }
    }
    M.arrow_maps.push_back(m);
  }
  validate_rep_shapes(Q, M);
  return M;
}

// Convenience string / file wrappers.

template <typename T, typename Reader>
T parse_with(const std::string& text, Reader reader) {
  std::istringstream in(text);
  return reader(in);
}

inline std::string slurp_file(const std::string& path) {
  std::ifstream in(path);
  QPKIT_REQUIRE(in.good(), "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline IntMat load_matrix(const std::string& path) {
  std::ifstream in(path);
  QPKIT_REQUIRE(in.good(), "cannot open file: " + path);
  return read_matrix(in);
}

inline Quiver load_quiver(const std::string& path) {
  std::ifstream in(path);
  QPKIT_REQUIRE(in.good(), "cannot open file: " + path);
  return read_quiver(in);
}

inline PathVector load_potential(const std::string& path, const Quiver& Q) {
  std::ifstream in(path);
  QPKIT_REQUIRE(in.good(), "cannot open file: " + path);
  return read_potential(in, Q);
}

inline DecoratedRep load_rep(const std::string& path, const Quiver& Q) {
  std::ifstream in(path);
  QPKIT_REQUIRE(in.good(), "cannot open file: " + path);
  return read_rep(in, Q);
}

}  // namespace qpkit
