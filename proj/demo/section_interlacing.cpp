// Walks through the section construction for one (n, r): the recurrence
// matrix, each iterate of the sections, and the interlacing certificate of
// the final sequence.
//
//   section_interlacing [n] [r]      (defaults: n = 4, r = 4)
#include "lhp/edgewise.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  const unsigned n = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 4;
  const unsigned r = argc > 2 ? static_cast<unsigned>(std::atoi(argv[2])) : 4;
  if (r < 2) {
    std::cerr << "r must be at least 2\n";
    return 2;
  }

  const lhp::NXMatrix m = lhp::lemma_matrix(r);
  std::cout << "recurrence matrix (rows g_" << r - 1 << "..g_0, columns f_" << r - 1 << "..f_0):\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      std::cout << (c ? " " : "  ") << (m(i, c).is_linear() ? "x" : lhp::to_string(m(i, c).value()));
    std::cout << '\n';
  }
  std::cout << "NX conditions: " << (lhp::nx_check(m) ? "hold" : "fail") << "\n\n";

  lhp::SectionSequence s = lhp::unit_sections(r);
  for (unsigned step = 1; step <= n; ++step) {
    s = lhp::lemma_apply(s);
    std::cout << "step " << step << ":";
    for (unsigned j = r; j-- > 0;) std::cout << "  h_" << j << " = " << lhp::to_string(s.sections[j]);
    const auto check = lhp::is_interlacing_sequence(lhp::interlacing_order(s), true);
    std::cout << "   [" << (check ? "interlacing" : "NOT interlacing") << "]\n";
  }

  const lhp::Polynomial ell = lhp::local_h_edgewise({n, r});
  std::cout << "\nlocal h-polynomial: " << lhp::to_string(ell) << " = x^" << (n + r - 1) / r << " * h_"
            << lhp::local_section_index({n, r}) << '\n';
  if (!ell.is_zero()) {
    for (const auto& root : lhp::isolate_roots(ell).roots)
      std::cout << "  root in (" << lhp::to_string(root.interval.lo) << ", " << lhp::to_string(root.interval.hi)
                << "], multiplicity " << root.multiplicity << '\n';
  }
  return 0;
}
