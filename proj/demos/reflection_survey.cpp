// Surveys the infinite family of irreducible complex reflection groups with
// small parameters: hyperplane orbit counts by enumeration against the closed
// form, and the rational invariant attached to each braid group.
#include <iomanip>
#include <iostream>

#include <malcev/malcev.hpp>

int main() {
    std::cout << std::left << std::setw(12) << "group" << std::setw(14)
              << "hyperplanes" << std::setw(14) << "orbit sizes" << std::setw(10)
              << "formula" << "descriptor\n";
    for (long d = 1; d <= 8; ++d)
        for (long e = 1; d * e <= 8; ++e)
            for (long n = 1; n <= 4; ++n) {
                if (d == 1 && e == 1)
                    continue;  // symmetric groups live at e = 1, d > 1 ranks
                if (d == 1 && n == 1)
                    continue;  // trivial group
                if (d * e == 2 && e == 2 && n == 2)
                    continue;  // reducible
                malcev::FamilyParams f{d, e, n};
                malcev::ReflectionGroupSpec spec{f, 0};
                malcev::HyperplaneOrbits orbits = malcev::hyperplane_orbits(f);
                std::string sizes;
                for (std::size_t k = 0; k < orbits.sizes().size(); ++k)
                    sizes += (k ? "+" : "") + std::to_string(orbits.sizes()[k]);
                malcev::MalcevDescriptor desc = malcev::malcev_descriptor(spec);
                std::cout << std::setw(12) << spec.str() << std::setw(14)
                          << malcev::hyperplanes(f).size() << std::setw(14) << sizes
                          << std::setw(10) << malcev::c_formula(spec).c << desc.tag
                          << "\n";
            }
    return 0;
}
