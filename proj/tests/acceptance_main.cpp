// Acceptance gate: one pass/fail line per shipping criterion, exit 0 only
// if every criterion holds.  Each block recomputes its evidence from
// scratch; nothing here is stubbed or tolerance-based — all comparisons
// are exact.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "qpkit/cluster_rep.hpp"
#include "qpkit/grassmann.hpp"
#include "qpkit/hom.hpp"
#include "qpkit/jacobian_algebra.hpp"
#include "qpkit/presentation.hpp"
#include "qpkit/rep.hpp"
#include "qpkit/verify.hpp"

namespace {

using namespace qpkit;
using namespace qpkit::testfix;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Tally {
  long long total = 0;
  long long failed = 0;
};

std::map<std::string, Tally> tally(const VerificationReport& r) {
  std::map<std::string, Tally> m;
  for (const CheckRecord& c : r.checks) {
    Tally& t = m[c.name];
    ++t.total;
    if (!c.pass) ++t.failed;
  }
  return m;
}

Tally sum_of(const std::map<std::string, Tally>& m,
             const std::vector<std::string>& names) {
  Tally out;
  for (const std::string& name : names) {
    auto it = m.find(name);
    if (it == m.end()) continue;
    out.total += it->second.total;
    out.failed += it->second.failed;
  }
  return out;
}

bool all_pass(const std::map<std::string, Tally>& m, const std::string& name) {
  auto it = m.find(name);
  return it != m.end() && it->second.failed == 0;
}

int g_failures = 0;

void line(int id, bool pass, const std::string& detail) {
  if (!pass) ++g_failures;
  std::cout << "criterion " << std::setw(2) << id << ": "
            << (pass ? "PASS" : "FAIL") << "  " << detail << '\n'
            << std::flush;
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << s << " s";
  return os.str();
}

// A thin one-dimensional interval representation of the 3-cycle, shifted
// to start at the given vertex.
DecoratedRep shifted_interval(int start) {
  DecoratedRep m;
  m.dims = {0, 0, 0};
  m.dims[(start + 1) % 3] = 1;
  m.dims[(start + 2) % 3] = 1;
  m.dec_dims = {0, 0, 0};
  // arrows: a: 1->2, b: 2->3, c: 3->1 (1-based); the map on the arrow
  // connecting the two occupied vertices is the identity.
  for (int a = 0; a < 3; ++a) {
    int tail = a, head = (a + 1) % 3;
    m.arrow_maps.push_back(m.dims[head] == 1 && m.dims[tail] == 1
                               ? RatMat::identity(1)
                               : RatMat(m.dims[head], m.dims[tail]));
  }
  return m;
}

}  // namespace

int main() {
  // ---- rank-2 reference walk: table and periodicity -------------------
  {
    const auto start = Clock::now();
    VerificationReport r;
    std::string err;
    try {
      r = reproduce_a2();
    } catch (const std::exception& e) {
      err = e.what();
    }
    const double sec = seconds_since(start);
    const auto t = tally(r);
    const Tally table =
        sum_of(t, {"table_matrix", "table_g", "table_f", "table_h"});
    const Tally period =
        sum_of(t, {"period_matrix", "period_g", "period_f", "period_h"});
    line(1,
         err.empty() && table.total == 42 && table.failed == 0 && sec < 1.0,
         "rank-2 table reproduced exactly (" +
             std::to_string(table.total - table.failed) + "/42 records, " +
             fmt_seconds(sec) + ")" + (err.empty() ? "" : " error: " + err));
    line(2, err.empty() && period.total == 42 && period.failed == 0,
         "five-step periodicity exact for six base points (" +
             std::to_string(period.total - period.failed) + "/42 records)");
  }

  // ---- interval generating functions on the oriented 3-cycle ----------
  {
    bool pass = false;
    std::string detail;
    try {
      const QP qp = three_cycle_qp();
      const Quiver& Q = qp.quiver;
      const DecoratedRep m1 = shifted_interval(0);
      const DecoratedRep m2 = shifted_interval(1);
      const DecoratedRep m3 = shifted_interval(2);
      const IntPolynomial f1 = f_poly_of(Q, m1);
      const IntPolynomial f2 = f_poly_of(Q, m2);
      const IntPolynomial f3 = f_poly_of(Q, m3);
      const bool singles = f1 == parse_polynomial("1+u3+u2*u3", 3) &&
                           f2 == parse_polynomial("1+u1+u1*u3", 3) &&
                           f3 == parse_polynomial("1+u2+u1*u2", 3);
      const IntPolynomial product = f1 * f2 * f3;
      const DecoratedRep sum = direct_sum(Q, direct_sum(Q, m1, m2), m3);
      const bool sum_matches = f_poly_of(Q, sum) == product;
      const auto it = product.terms.find(IntVec{1, 1, 1});
      const bool coeff4 = it != product.terms.end() && it->second == 4;
      pass = singles && sum_matches && coeff4;
      detail =
          "interval generating functions, their direct-sum product, and the "
          "middle coefficient 4";
      if (!singles) detail += " [single-module mismatch]";
      if (!sum_matches) detail += " [direct-sum mismatch]";
      if (!coeff4) detail += " [coefficient mismatch]";
    } catch (const std::exception& e) {
      detail = std::string("error: ") + e.what();
    }
    line(3, pass, detail);
  }

  // ---- the randomized campaign feeds criteria 4, 6, 7, 8, 9 -----------
  {
    VerifyConfig cfg;  // n in [2,4], words up to 6, truncation 12
    cfg.instances = 240;
    cfg.pairs = 100;
    const auto start = Clock::now();
    VerificationReport r;
    std::string err;
    try {
      r = verify_theorems(cfg);
    } catch (const std::exception& e) {
      err = e.what();
    }
    const double sec = seconds_since(start);
    const auto t = tally(r);
    const bool healthy = err.empty() && all_pass(t, "summary_instances");

    const Tally g = sum_of(t, {"cluster_rep_g_matches_recurrence"});
    line(4,
         healthy && g.total >= 200 && g.failed == 0 && sec < 600.0,
         "degree shifts of built representations match the recurrence on " +
             std::to_string(g.total) + " instances (" + fmt_seconds(sec) +
             ")" + (err.empty() ? "" : " error: " + err));

    // criterion 5 is the exhaustive small-chain sweep, reported below.
    const auto start5 = Clock::now();
    {
      VerificationReport ta;
      std::string err5;
      try {
        ta = verify_small_type_a(12, 6);
      } catch (const std::exception& e) {
        err5 = e.what();
      }
      const auto t5 = tally(ta);
      const Tally fchecks = sum_of(t5, {"type_a_f_check"});
      line(5,
           err5.empty() && fchecks.failed == 0 && fchecks.total > 0 &&
               all_pass(t5, "summary_certified"),
           "exhaustive two- and three-vertex chains: " +
               std::to_string(fchecks.total - fchecks.failed) + "/" +
               std::to_string(fchecks.total) +
               " slot polynomials agree where certified (" +
               fmt_seconds(seconds_since(start5)) + ")" +
               (err5.empty() ? "" : " error: " + err5));
    }

    const Tally pairs = sum_of(t, {"hom_mutation_identity"});
    line(6,
         healthy && pairs.total >= 100 && pairs.failed == 0 &&
             all_pass(t, "summary_pair_target"),
         "symmetrized invariant unchanged across mutation on " +
             std::to_string(pairs.total) + " module pairs");

    bool kron = true;
    std::string kron_note;
    try {
      IntMat kb(2, 2);
      kb.at(0, 1) = -2;
      kb.at(1, 0) = 2;
      const Quiver kq = quiver_from_matrix(kb);
      const QP kqp = make_qp(kq, PathVector{}, 8);
      for (int n = 1; n <= 5; ++n) {
        DecoratedRep m;
        m.dims = {n, n};
        m.dec_dims = {0, 0};
        RatMat shift(n, n);
        for (int i = 0; i + 1 < n; ++i) shift.at(i, i + 1) = 1;
        m.arrow_maps = {RatMat::identity(n), shift};
        const IntVec want_g = {n, -n};
        kron = kron && rep_g_vector(kqp, m) == want_g &&
               e_invariant(kqp, m) == Int(n) &&
               hom_dim(kq, m, m) == n &&
               lower_bound_check(kqp, m).bound == Int(0);
      }
    } catch (const std::exception& e) {
      kron = false;
      kron_note = std::string(" error: ") + e.what();
    }
    const Tally lb = sum_of(t, {"self_extension_lower_bound"});
    const Tally ez = sum_of(t, {"cluster_rep_e_invariant_zero"});
    line(7,
         healthy && lb.total > 0 && lb.failed == 0 && ez.total > 0 &&
             ez.failed == 0 && kron,
         "self-extension bound on " + std::to_string(lb.total) +
             " modules, zero exactly on built representations (" +
             std::to_string(ez.total) +
             "), and the two-arrow ladder family n=1..5" + kron_note);

    const Tally conj = sum_of(
        t, {"conjecture_f_constant_term", "conjecture_f_dominant_monomial",
            "conjecture_sign_coherence", "conjecture_g_determinant",
            "conjecture_separation"});
    const Tally trans = sum_of(t, {"transition_full", "transition_g_only"});
    line(8,
         healthy && conj.total > 0 && conj.failed == 0 && trans.total > 0 &&
             trans.failed == 0,
         "structural properties (" + std::to_string(conj.total) +
             " records) and edge transitions (" + std::to_string(trans.total) +
             " records) all exact");

    const Tally minv = sum_of(t, {"matrix_involution"});
    const Tally rinv = sum_of(t, {"rep_involution_invariants"});
    const Tally iso = sum_of(t, {"iso_probe"});
    line(9,
         healthy && minv.total > 0 && minv.failed == 0 && rinv.total > 0 &&
             rinv.failed == 0 && iso.failed == 0 &&
             all_pass(t, "summary_iso_probe"),
         "double mutation restores matrices (" + std::to_string(minv.total) +
             "), representation invariants (" + std::to_string(rinv.total) +
             "), and probes confirm isomorphism with no refutation (" +
             std::to_string(iso.total) + ")");
  }

  // ---- projective presentations over the two certified algebras -------
  {
    bool pass = true;
    long long pair_count = 0;
    std::string note;
    try {
      Rng rng(20260823);
      std::vector<std::pair<JacobianAlgebra, std::vector<DecoratedRep>>> pools;

      IntMat b2(2, 2);
      b2.at(0, 1) = 1;
      b2.at(1, 0) = -1;
      const QP a2qp = make_qp(quiver_from_matrix(b2), PathVector{}, 4);
      JacobianAlgebra a2alg(a2qp);
      std::vector<DecoratedRep> a2pool;
      for (int k = 0; k < 2; ++k) {
        a2pool.push_back(simple_rep(a2qp.quiver, k));
        a2pool.push_back(projective_module(a2alg, k));
      }
      a2pool.push_back(negative_simple_rep(a2qp.quiver, 0));
      pools.emplace_back(std::move(a2alg), std::move(a2pool));

      const QP tqp = three_cycle_qp();
      JacobianAlgebra talg(tqp);
      std::vector<DecoratedRep> tpool;
      for (int k = 0; k < 3; ++k) {
        tpool.push_back(simple_rep(tqp.quiver, k));
        tpool.push_back(projective_module(talg, k));
      }
      tpool.push_back(negative_simple_rep(tqp.quiver, 1));
      tpool.push_back(shifted_interval(0));
      pools.emplace_back(std::move(talg), std::move(tpool));

      for (const auto& [alg, pool] : pools) {
        for (const DecoratedRep& m : pool) {
          if (!psi_after_phi_is_zero(alg.qp(), m)) {
            pass = false;
            note += " [derivative-after-commutator nonzero]";
          }
          build_sequence(alg, m);          // validates exactness internally
          minimal_presentation(alg, m, &rng);  // validates minimality
        }
        for (const DecoratedRep& m : pool)
          for (const DecoratedRep& n : pool) {
            e_proj_dimension(alg, m, n, &rng);  // validates the dimension law
            ++pair_count;
          }
      }
    } catch (const std::exception& e) {
      pass = false;
      note += std::string(" error: ") + e.what();
    }
    line(10, pass && pair_count >= 30,
         "exact sequences, minimal presentations, and presentation-space "
         "dimensions on " +
             std::to_string(pair_count) + " module pairs" + note);
  }

  std::cout << "ACCEPTANCE: " << (10 - g_failures) << "/10 criteria passed\n";
  return g_failures == 0 ? 0 : 1;
}
