#ifndef LEGENDRIAN_CLASSIFY_HPP
#define LEGENDRIAN_CLASSIFY_HPP

#include "legendrian/theta.hpp"

#include <array>
#include <string>
#include <vector>

namespace legendrian {

struct Admissibility {
    bool admissible = true;
    std::vector<std::string> violations;
};

// Each cycle is a Legendrian unknot (tb + |rot| <= -1, tb + rot odd) and the
// total rotation lies in {-1, 0, 1}.
Admissibility check_admissible(const ThetaInvariants &inv);
bool is_admissible(const ThetaInvariants &inv);

// 0 if inadmissible, 2 if Rot = 0, otherwise 1.
int count_embeddings(const ThetaInvariants &inv);

// Key is admissible and sigma1 agrees with the forced value when Rot != 0.
bool is_valid_key(const EmbeddingKey &key);

// All valid keys over an invariant pair (0, 1 or 2 of them).
std::vector<EmbeddingKey> keys_over(const ThetaInvariants &inv);

// Relabeling of Theta: the relabeled graph's edge e_i is the old edge
// e_{perm[i]}; swap_vertices exchanges v1 and v2.
struct AutElement {
    bool swap_vertices = false;
    std::array<int, 3> perm{0, 1, 2};

    static AutElement identity() { return {}; }
    static AutElement vertex_swap() { return {true, {0, 1, 2}}; }
    // Transposition of e_{i+1}, e_{i+2} (0-based i), i.e. phi_1, phi_2, phi_3.
    static AutElement edge_transposition(int i);
    // All 12 elements in a fixed order.
    static std::vector<AutElement> all();

    int perm_sign() const;

    bool operator==(const AutElement &) const = default;
};

// apply_aut(apply_aut(k, a), b) == apply_aut(k, compose(b, a)).
AutElement compose(const AutElement &b, const AutElement &a);

ThetaInvariants apply_aut(const ThetaInvariants &inv, const AutElement &a);
EmbeddingKey apply_aut(const EmbeddingKey &key, const AutElement &a);

// Sorted, duplicate-free orbit under the 12 relabelings.
std::vector<EmbeddingKey> orbit(const EmbeddingKey &key);
// Lexicographically least orbit member over (tb, rot, sigma1).
EmbeddingKey canonical(const EmbeddingKey &key);
bool equivalent_up_to_relabeling(const EmbeddingKey &a, const EmbeddingKey &b);

struct ImageCount {
    int by_orbits = 0;    // distinct orbits among keys_over(inv)
    int by_criterion = 0; // transposition-fixing criterion on rho_3 only
    bool agrees() const { return by_orbits == by_criterion; }
};

ImageCount count_images(const ThetaInvariants &inv);

// All admissible pairs with every tb_i >= -bound, in lexicographic order of
// (tb1, tb2, tb3, rot1, rot2, rot3).
std::vector<ThetaInvariants> enumerate_admissible(int bound);

} // namespace legendrian

#endif
