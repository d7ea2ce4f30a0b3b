#pragma once

namespace jagpath {

// K = 2*kappa - epsilon with epsilon in {0, 1} and 1 <= i <= kappa.
// K >= 2 is accepted here; jagged restriction itself requires K > 2.
struct RestrictionParams {
    int K = 3;
    int i = 1;

    RestrictionParams() = default;
    RestrictionParams(int K, int i);

    int kappa() const { return (K + 1) / 2; }
    int epsilon() const { return 2 * kappa() - K; }
    // Start height of the associated lattice paths.
    int start_height() const { return 2 * kappa() - 2 * i; }

    friend bool operator==(const RestrictionParams&, const RestrictionParams&) = default;
};

}  // namespace jagpath
