// Mutates the oriented 3-cycle with its natural cubic potential at one
// vertex, shows the trivial two-arrow cycle being split off, and mutates
// back to recover the starting shape.

#include <iostream>
#include <sstream>

#include "qpkit/io.hpp"
#include "qpkit/qp_mutate.hpp"

using namespace qpkit;

namespace {

void show(const std::string& label, const QP& qp) {
  std::ostringstream q, s;
  write_quiver(q, qp.quiver);
  write_potential(s, qp.quiver, qp.potential);
  std::cout << label << "\n  quiver:\n";
  std::istringstream lines(q.str());
  for (std::string l; std::getline(lines, l);) std::cout << "    " << l << '\n';
  std::cout << "  potential:\n";
  if (s.str().empty()) std::cout << "    (zero)\n";
  std::istringstream plines(s.str());
  for (std::string l; std::getline(plines, l);) std::cout << "    " << l << '\n';
}

}  // namespace

int main() {
  Quiver Q(3);
  Q.add_arrow("a", 0, 1);
  Q.add_arrow("b", 1, 2);
  Q.add_arrow("c", 2, 0);
  PathVector S = pv_of(Path{{2, 1, 0}}, 1);  // the full cycle c b a
  const QP qp = make_qp(Q, S, 8);

  show("start", qp);

  const QPMutationResult once = mutate_qp(qp, 0);
  std::cout << "\nmutating at vertex 1 ...\n";
  show("after one mutation", once.reduced);
  std::cout << "  trivial two-arrow cycles split off: " << once.trivial_pairs
            << "\n\n";

  const QPMutationResult back = mutate_qp(once.reduced, 0);
  std::cout << "mutating at vertex 1 again ...\n";
  show("after mutating back", back.reduced);
  std::cout << "\nthe double mutation restores the 3-cycle with its cubic "
               "potential (arrow names pick up primes)\n";
  return 0;
}
