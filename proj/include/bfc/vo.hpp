#pragma once

#include "bfc/matrix.hpp"
#include "bfc/partition.hpp"

#include <optional>
#include <vector>

namespace bfc {

struct StandardTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;  // entries 1..n

    // contents()[i-1] = col - row of the box holding i.
    std::vector<int> contents() const;
    // Number of pairs a < b with b in a strictly higher row than a.
    int length() const;
    bool operator==(const StandardTableau&) const = default;
};

// Standard tableaux ordered by content vector, largest first, so the
// row-reading tableau T^mu comes first.
const std::vector<StandardTableau>& tableaux(const Partition& shape);

// Exchanges the entries i and i+1; the result need not be standard.
StandardTableau swap_entries(const StandardTableau& t, int i);
// The i with i+1 in a strictly higher row than i, so that s_i T is shorter.
std::vector<int> descents(const StandardTableau& t);

// c_{T^mu} = 1 and c_{T'} = d/(d-1) c_T for T' = s_i T longer than T, d = a_{i+1}(T) - a_i(T).
Q c_scale(const StandardTableau& t);

// Matrix of s_i in the rescaled basis; column j is the image of basis vector j.
// Throws std::out_of_range unless 1 <= i < |shape|.
const Matrix& rep_action(int i, const Partition& shape);

// L_lam -> L_mu, sending v_T to v_{T with n in the new box}, n = |mu|.
// Throws std::invalid_argument unless mu is in ind_set(lam).
Matrix f_map(const Partition& lam, const Partition& mu);

// The partition nu != lam with lam1 -> nu -> mu, when it exists.
std::optional<Partition> square_partner(const Partition& lam1, const Partition& lam, const Partition& mu);

struct SquareCoeffs {
    Q alpha;
    Q beta;
};
// Solves s_n f_{lam mu} f_{lam1 lam} = alpha f_{lam mu} f_{lam1 lam} + beta f_{nu mu} f_{lam1 nu}.
SquareCoeffs square_coeffs(const Partition& lam1, const Partition& lam, const Partition& nu, const Partition& mu);

Q h_coeff(const Partition& lam1, const Partition& lam);

enum class Branch { lam, nu };

// Ratio form. Throws std::invalid_argument on an invalid path or a nu-branch
// request when the Hom space is one dimensional.
Q a_coeff(const Partition& lam1, const Partition& lam, const Partition& mu, Branch branch);

// Expanded product form; only defined when the box lam \ lam1 lies strictly
// above and to the right of mu \ lam.
std::optional<Q> a_closed(const Partition& lam1, const Partition& lam, const Partition& mu);

// From the representation matrices and h alone.
Q a_oracle(const Partition& lam1, const Partition& lam, const Partition& mu, Branch branch);

}  // namespace bfc
