#pragma once

#include "bfc/lincomb.hpp"
#include "bfc/partition.hpp"

#include <vector>

namespace bfc {

using FockVector = LinComb<ChargedSequence>;

FockVector fock(const ChargedSequence& s, const Q& c = Q(1));
FockVector fock(const Partition& p, const Q& c = Q(1));

// Inserts 2j with sign (-1)^n, n = number of entries below 2j. Charge drops by one.
FockVector apply_psi(int j, const FockVector& v);
// Deletes 2j = x_n with sign (-1)^(n-1). Charge rises by one.
FockVector apply_psi_star(int j, const FockVector& v);
// t_{2j} = psi_j, t_{2j-1} = psi*_j + psi*_{j-1}.
FockVector apply_t(int i, const FockVector& v);
// Rightmost factor acts first.
FockVector apply_word(const std::vector<int>& word, const FockVector& v);
// Adds 2*steps to every entry.
FockVector tau(const FockVector& v, int steps);

// tau^{-1} sum_{i<=n} (-1)^i t_{2i+1}, summed over the finitely many i that act.
FockVector s_bar_n(int n, const FockVector& v);
// tau sum_{i>=-n} (-1)^i t_{2i}, summed over the finitely many i that act.
FockVector s_n_op(int n, const FockVector& v);

// sum_{-N<=i<=0} t_{2i} t_{2i-1} - sum_{0<i<=N} t_{2i-1} t_{2i}
FockVector g_q_trunc(int N, const FockVector& v);
// sum_{-N<=i<=0} t_{2i} t_{2i+1} - sum_{0<i<=N} t_{2i+1} t_{2i}
FockVector g_p_trunc(int N, const FockVector& v);

// Smallest N guaranteed stable for both truncations on to_sequence(p).
int stability_bound(const Partition& p);

// All charge-k basis sequences of energy exactly e.
std::vector<ChargedSequence> sequences_of_energy(int k, int e);

std::string to_string(const FockVector& v);

}  // namespace bfc
