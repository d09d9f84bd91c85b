// Hall polynomials for a few objects on the weighted projective line of type (2,2,2).

#include "hwpl/hall.hpp"

#include <iostream>

int main() {
    using namespace hwpl;
    const WeightType w({2, 2, 2});

    for (int n = 0; n <= 4; ++n) std::cout << "f_" << n << " = " << f_poly(n).to_string() << '\n';
    std::cout << "s_0^(0) = " << s_poly(0, 0).to_string() << '\n';

    const ExtensionBundle e(LElement::zero(w), LElement::zero(w));
    const auto e2 = e.twisted(LElement::omega(w));
    std::cout << "E = " << e.to_string() << ", E' = " << e2.to_string() << ", N = " << n_invariant(e, e2) << '\n';

    for (int i = 1; i <= 3; ++i)
        for (int j = 0; j < 2; ++j) {
            const auto s = TubeIndec::exceptional(w, i, j, 2);
            if (!(k0_class_ext(e2) + k0_class_torsion(w, s) == k0_class_ext(e))) continue;
            if (ext_bundle_hom_to_top(e, s) == 0) continue;
            const auto r = hall_ext_except_torsion(e, e2, s);
            std::cout << "F^E_{" << s.to_string() << ", E'} = " << r.value.to_string() << ", at q = 2: "
                      << r.value.eval(2) << '\n';
        }

    std::cout << "F^E_{L(omega), L(x)} = " << hall_ext_from_lines(e, e.sub_twist(), e.quotient_twist()).value.to_string()
              << '\n';
}
