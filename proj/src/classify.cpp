#include "legendrian/classify.hpp"

#include "legendrian/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace legendrian {

Admissibility check_admissible(const ThetaInvariants &inv) {
    Admissibility out;
    for (int i = 0; i < 3; ++i) {
        const std::string cycle = "gamma_" + std::to_string(i + 1);
        if (inv.tb[i] + std::abs(inv.rot[i]) > -1)
            out.violations.push_back("tb + |rot| <= -1 fails on " + cycle);
        if (((inv.tb[i] + inv.rot[i]) % 2 + 2) % 2 != 1)
            out.violations.push_back("tb + rot = 1 mod 2 fails on " + cycle);
    }
    const int total = inv.total_rot();
    if (total < -1 || total > 1)
        out.violations.push_back("Rot = " + std::to_string(total) + " is outside {-1, 0, 1}");
    out.admissible = out.violations.empty();
    return out;
}

bool is_admissible(const ThetaInvariants &inv) { return check_admissible(inv).admissible; }

int count_embeddings(const ThetaInvariants &inv) {
    if (!is_admissible(inv))
        return 0;
    return inv.total_rot() == 0 ? 2 : 1;
}

bool is_valid_key(const EmbeddingKey &key) {
    if (!is_admissible(key.inv) || (key.sigma1 != 1 && key.sigma1 != -1))
        return false;
    const int total = key.inv.total_rot();
    return total == 0 || key.sigma1 == total;
}

std::vector<EmbeddingKey> keys_over(const ThetaInvariants &inv) {
    std::vector<EmbeddingKey> out;
    if (!is_admissible(inv))
        return out;
    const int total = inv.total_rot();
    if (total == 0) {
        out.push_back({inv, -1});
        out.push_back({inv, 1});
    } else {
        out.push_back({inv, total});
    }
    return out;
}

AutElement AutElement::edge_transposition(int i) {
    AutElement a;
    std::swap(a.perm[i % 3], a.perm[(i + 1) % 3]);
    return a;
}

std::vector<AutElement> AutElement::all() {
    std::vector<AutElement> out;
    std::array<int, 3> p{0, 1, 2};
    for (bool swap : {false, true}) {
        std::array<int, 3> q = p;
        do {
            out.push_back({swap, q});
        } while (std::next_permutation(q.begin(), q.end()));
    }
    return out;
}

int AutElement::perm_sign() const {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            inversions += perm[i] > perm[j] ? 1 : 0;
    return inversions % 2 == 0 ? 1 : -1;
}

AutElement compose(const AutElement &b, const AutElement &a) {
    AutElement c;
    c.swap_vertices = a.swap_vertices != b.swap_vertices;
    for (int i = 0; i < 3; ++i)
        c.perm[i] = a.perm[b.perm[i]];
    return c;
}

ThetaInvariants apply_aut(const ThetaInvariants &inv, const AutElement &a) {
    // The relabeled gamma_i runs along old edges perm[i] (forward) then
    // perm[i+1]; that is an old cycle, possibly reversed.
    ThetaInvariants out;
    const int vsign = a.swap_vertices ? -1 : 1;
    for (int i = 0; i < 3; ++i) {
        const int x = a.perm[i], y = a.perm[(i + 1) % 3];
        int j = 0, sign = 1;
        if ((x + 1) % 3 == y) {
            j = x;
        } else {
            j = y;
            sign = -1;
        }
        out.tb[i] = inv.tb[j];
        out.rot[i] = vsign * sign * inv.rot[j];
    }
    return out;
}

EmbeddingKey apply_aut(const EmbeddingKey &key, const AutElement &a) {
    EmbeddingKey out;
    out.inv = apply_aut(key.inv, a);
    const int base = a.swap_vertices ? key.sigma2() : key.sigma1;
    out.sigma1 = a.perm_sign() * base;
    return out;
}

std::vector<EmbeddingKey> orbit(const EmbeddingKey &key) {
    std::vector<EmbeddingKey> out;
    for (const auto &a : AutElement::all())
        out.push_back(apply_aut(key, a));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EmbeddingKey canonical(const EmbeddingKey &key) { return orbit(key).front(); }

bool equivalent_up_to_relabeling(const EmbeddingKey &a, const EmbeddingKey &b) { return canonical(a) == canonical(b); }

ImageCount count_images(const ThetaInvariants &inv) {
    ImageCount c;
    const auto keys = keys_over(inv);
    std::vector<EmbeddingKey> reps;
    for (const auto &k : keys)
        reps.push_back(canonical(k));
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    c.by_orbits = static_cast<int>(reps.size());

    if (keys.empty()) {
        c.by_criterion = 0;
    } else if (inv.total_rot() != 0) {
        c.by_criterion = 1;
    } else {
        bool fixed = false;
        for (int i = 0; i < 3; ++i)
            fixed = fixed || apply_aut(inv, AutElement::edge_transposition(i)) == inv;
        c.by_criterion = fixed ? 1 : 2;
    }
    return c;
}

std::vector<ThetaInvariants> enumerate_admissible(int bound) {
    if (bound < 1)
        throw InvalidInput("enumeration bound must be >= 1");
    std::vector<ThetaInvariants> out;
    ThetaInvariants inv;
    for (inv.tb[0] = -bound; inv.tb[0] <= -1; ++inv.tb[0])
        for (inv.tb[1] = -bound; inv.tb[1] <= -1; ++inv.tb[1])
            for (inv.tb[2] = -bound; inv.tb[2] <= -1; ++inv.tb[2])
                for (inv.rot[0] = inv.tb[0] + 1; inv.rot[0] <= -1 - inv.tb[0]; inv.rot[0] += 2)
                    for (inv.rot[1] = inv.tb[1] + 1; inv.rot[1] <= -1 - inv.tb[1]; inv.rot[1] += 2)
                        for (inv.rot[2] = inv.tb[2] + 1; inv.rot[2] <= -1 - inv.tb[2]; inv.rot[2] += 2) {
                            const int total = inv.total_rot();
                            if (total >= -1 && total <= 1)
                                out.push_back(inv);
                        }
    return out;
}

} // namespace legendrian
