#pragma once
// Decorated representations of a quiver with potential: a module given by a
// matrix per arrow, required to kill every cyclic derivative of the
// potential and to be nilpotent, plus a decoration dimension per vertex.
// Provides the in/out triangle maps at a vertex and the derived g- and
// h-vectors.

#include <string>
#include <vector>

#include "qpkit/common.hpp"
#include "qpkit/path.hpp"
#include "qpkit/potential.hpp"
#include "qpkit/quiver.hpp"
#include "qpkit/ratmat.hpp"

namespace qpkit {

struct DecoratedRep {
  std::vector<int> dims;         // dim M(i) per vertex
  std::vector<int> dec_dims;     // dim V(i) per vertex (decoration)
  std::vector<RatMat> arrow_maps;  // per arrow a: M(t(a)) -> M(h(a))

  friend bool operator==(const DecoratedRep&, const DecoratedRep&) = default;
};

inline DecoratedRep zero_rep(const Quiver& Q) {
  DecoratedRep r;
  r.dims.assign(static_cast<size_t>(Q.vertex_count()), 0);
  r.dec_dims.assign(static_cast<size_t>(Q.vertex_count()), 0);
  for (int a = 0; a < Q.arrow_count(); ++a) r.arrow_maps.emplace_back(0, 0);
  return r;
}

inline DecoratedRep simple_rep(const Quiver& Q, int k) {
  DecoratedRep r = zero_rep(Q);
  r.dims[static_cast<size_t>(k)] = 1;
  for (int a = 0; a < Q.arrow_count(); ++a)
    r.arrow_maps[static_cast<size_t>(a)] =
        RatMat(r.dims[static_cast<size_t>(Q.arrow(a).head)],
               r.dims[static_cast<size_t>(Q.arrow(a).tail)]);
  return r;
}

inline DecoratedRep negative_simple_rep(const Quiver& Q, int k) {
  DecoratedRep r = zero_rep(Q);
  r.dec_dims[static_cast<size_t>(k)] = 1;
  return r;
}

inline void validate_rep_shapes(const Quiver& Q, const DecoratedRep& M) {
  QPKIT_REQUIRE(static_cast<int>(M.dims.size()) == Q.vertex_count() &&
                    static_cast<int>(M.dec_dims.size()) == Q.vertex_count() &&
                    static_cast<int>(M.arrow_maps.size()) == Q.arrow_count(),
                "validate_rep_shapes: size mismatch");
  for (int i = 0; i < Q.vertex_count(); ++i)
    QPKIT_REQUIRE(M.dims[static_cast<size_t>(i)] >= 0 &&
                      M.dec_dims[static_cast<size_t>(i)] >= 0,
                  "validate_rep_shapes: negative dimension");
  for (int a = 0; a < Q.arrow_count(); ++a) {
    const RatMat& m = M.arrow_maps[static_cast<size_t>(a)];
    QPKIT_REQUIRE(
        m.rows == M.dims[static_cast<size_t>(Q.arrow(a).head)] &&
            m.cols == M.dims[static_cast<size_t>(Q.arrow(a).tail)],
        "validate_rep_shapes: bad shape for arrow '" + Q.arrow(a).id + "'");
  }
}

inline RatMat evaluate_path(const Quiver& Q, const DecoratedRep& M,
                            const Path& p) {
  if (p.is_lazy())
    return RatMat::identity(M.dims[static_cast<size_t>(p.base)]);
  RatMat r = RatMat::identity(M.dims[static_cast<size_t>(path_tail(Q, p))]);
  for (size_t i = p.word.size(); i-- > 0;)
    r = M.arrow_maps[static_cast<size_t>(p.word[i])] * r;
  return r;
}

// Sum of the path actions of a combination whose terms all go from `tail`
// to `head`; the explicit endpoints pin the shape when the combination is
// empty.
inline RatMat evaluate_pv(const Quiver& Q, const DecoratedRep& M,
                          const PathVector& v, int head, int tail) {
  RatMat r(M.dims[static_cast<size_t>(head)],
           M.dims[static_cast<size_t>(tail)]);
  for (const auto& [p, c] : v) {
    QPKIT_REQUIRE(path_head(Q, p) == head && path_tail(Q, p) == tail,
                  "evaluate_pv: term endpoints do not match");
    r = r + c * evaluate_path(Q, M, p);
  }
  return r;
}

// In/out triangle at a vertex: alpha collects the actions of the incoming
// arrows, beta those of the outgoing arrows, gamma the actions of the
// second derivatives of the potential.  The module relations make both
// composites alpha*gamma and gamma*beta vanish.
struct TriangleMaps {
  std::vector<int> ins, outs;  // arrow indices, stored order
  RatMat alpha;                // M_in(k)  -> M(k)
  RatMat beta;                 // M(k)     -> M_out(k)
  RatMat gamma;                // M_out(k) -> M_in(k)
};

inline TriangleMaps triangle_maps(const QP& qp, const DecoratedRep& M,
                                  int k) {
  const Quiver& Q = qp.quiver;
  TriangleMaps t;
  t.ins = Q.in_arrows(k);
  t.outs = Q.out_arrows(k);
  int m_in = 0, m_out = 0;
  for (int a : t.ins) m_in += M.dims[static_cast<size_t>(Q.arrow(a).tail)];
  for (int b : t.outs) m_out += M.dims[static_cast<size_t>(Q.arrow(b).head)];
  int dk = M.dims[static_cast<size_t>(k)];
  t.alpha = RatMat(dk, m_in);
  t.beta = RatMat(m_out, dk);
  t.gamma = RatMat(m_in, m_out);
  int col = 0;
  for (int a : t.ins) {
    set_block(t.alpha, 0, col, M.arrow_maps[static_cast<size_t>(a)]);
    col += M.dims[static_cast<size_t>(Q.arrow(a).tail)];
  }
  int row = 0;
  for (int b : t.outs) {
    set_block(t.beta, row, 0, M.arrow_maps[static_cast<size_t>(b)]);
    row += M.dims[static_cast<size_t>(Q.arrow(b).head)];
  }
  row = 0;
  for (int ai : t.ins) {
    col = 0;
    for (int bi : t.outs) {
      PathVector d2 = second_derivative(Q, qp.potential, bi, ai);
      set_block(t.gamma, row, col,
                evaluate_pv(Q, M, d2, Q.arrow(ai).tail, Q.arrow(bi).head));
      col += M.dims[static_cast<size_t>(Q.arrow(bi).head)];
    }
    row += M.dims[static_cast<size_t>(Q.arrow(ai).tail)];
  }
  return t;
}

// The arrow-span filtration reaches zero within `steps` steps; equivalent
// to every path of length >= steps acting by zero.
inline bool is_nilpotent_rep(const Quiver& Q, const DecoratedRep& M,
                             int steps) {
  std::vector<RatMat> span;
  for (int i = 0; i < Q.vertex_count(); ++i)
    span.push_back(RatMat::identity(M.dims[static_cast<size_t>(i)]));
  for (int step = 0; step < steps; ++step) {
    int dim_sum = 0;
    std::vector<RatMat> next;
    for (int i = 0; i < Q.vertex_count(); ++i) {
      RatMat acc(M.dims[static_cast<size_t>(i)], 0);
      for (int a = 0; a < Q.arrow_count(); ++a)
        if (Q.arrow(a).head == i)
          acc = hconcat(acc,
                        M.arrow_maps[static_cast<size_t>(a)] *
                            span[static_cast<size_t>(Q.arrow(a).tail)]);
      next.push_back(column_space(acc));
      dim_sum += next.back().cols;
    }
    if (dim_sum == 0) return true;
    span = std::move(next);
  }
  return false;
}

// Shapes, vanishing of every cyclic derivative of the potential on the
// module, the triangle composites, and nilpotency within the truncation
// order.
inline bool check_relations(const QP& qp, const DecoratedRep& M,
                            std::string* why = nullptr) {
  const Quiver& Q = qp.quiver;
  validate_rep_shapes(Q, M);
  for (int a = 0; a < Q.arrow_count(); ++a) {
    PathVector d = cyclic_derivative(Q, qp.potential, a);
    RatMat r = evaluate_pv(Q, M, d, Q.arrow(a).tail, Q.arrow(a).head);
    if (!r.is_zero()) {
      if (why) *why = "derivative of the potential by '" + Q.arrow(a).id +
                      "' acts nontrivially";
      return false;
    }
  }
  for (int k = 0; k < Q.vertex_count(); ++k) {
    TriangleMaps t = triangle_maps(qp, M, k);
    if (!(t.alpha * t.gamma).is_zero() || !(t.gamma * t.beta).is_zero()) {
      if (why) *why = "triangle composite at vertex " + std::to_string(k + 1) +
                      " does not vanish";
      return false;
    }
  }
  if (!is_nilpotent_rep(Q, M, qp.truncation)) {
    if (why) *why = "representation is not nilpotent within the truncation";
    return false;
  }
  return true;
}

// g_k = dim ker gamma_k - dim M(k) + dim V(k).
inline IntVec rep_g_vector(const QP& qp, const DecoratedRep& M) {
  IntVec g;
  for (int k = 0; k < qp.quiver.vertex_count(); ++k) {
    TriangleMaps t = triangle_maps(qp, M, k);
    g.push_back(t.gamma.cols - rank_of(t.gamma) -
                M.dims[static_cast<size_t>(k)] +
                M.dec_dims[static_cast<size_t>(k)]);
  }
  return g;
}

// h_k = -dim ker beta_k.
inline IntVec rep_h_vector(const QP& qp, const DecoratedRep& M) {
  IntVec h;
  for (int k = 0; k < qp.quiver.vertex_count(); ++k) {
    TriangleMaps t = triangle_maps(qp, M, k);
    h.push_back(rank_of(t.beta) - M.dims[static_cast<size_t>(k)]);
  }
  return h;
}

inline DecoratedRep direct_sum(const Quiver& Q, const DecoratedRep& A,
                               const DecoratedRep& B) {
  DecoratedRep r;
  for (int i = 0; i < Q.vertex_count(); ++i) {
    r.dims.push_back(A.dims[static_cast<size_t>(i)] +
                     B.dims[static_cast<size_t>(i)]);
    r.dec_dims.push_back(A.dec_dims[static_cast<size_t>(i)] +
                         B.dec_dims[static_cast<size_t>(i)]);
  }
  for (int a = 0; a < Q.arrow_count(); ++a) {
    const RatMat& x = A.arrow_maps[static_cast<size_t>(a)];
    const RatMat& y = B.arrow_maps[static_cast<size_t>(a)];
    RatMat m(x.rows + y.rows, x.cols + y.cols);
    set_block(m, 0, 0, x);
    set_block(m, x.rows, x.cols, y);
    r.arrow_maps.push_back(m);
  }
  return r;
}

inline std::string to_string(const Quiver& Q, const DecoratedRep& M) {
  std::string s = "dims " + vec_to_string(M.dims) + " dec " +
                  vec_to_string(M.dec_dims);
  for (int a = 0; a < Q.arrow_count(); ++a)
    s += "\n" + Q.arrow(a).id + ":\n" +
         to_string(M.arrow_maps[static_cast<size_t>(a)]);
  return s;
}

}  // namespace qpkit
