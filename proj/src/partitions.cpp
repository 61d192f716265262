#include "cyclohecke/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cyclohecke {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::divided_floor(int l) const {
    std::vector<int> out;
    for (int p : parts_) {
        int q = p / l;
        if (q > 0) out.push_back(q);
    }
    return Partition(std::move(out));
}

std::vector<int> Partition::padded(int d) const {
    if (length() > d) throw std::invalid_argument("partition longer than requested tuple");
    std::vector<int> t = parts_;
    t.resize(d, 0);
    return t;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Multipartition::Multipartition(std::vector<Partition> components) : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("multipartition needs level >= 1");
}

int Multipartition::total_size() const {
    int t = 0;
    for (const auto& p : components_) t += p.size();
    return t;
}

std::string Multipartition::to_string() const {
    std::string s;
    for (size_t i = 0; i < components_.size(); ++i) {
        if (i) s += '|';
        s += components_[i].to_string();
    }
    return s;
}

ResidueMultiset::ResidueMultiset(std::vector<Rat> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
}

Rat ResidueMultiset::power_sum(int r) const {
    Rat total = 0;
    for (const auto& e : entries_) {
        Rat p = 1;
        for (int t = 0; t < r; ++t) p *= e;
        total += p;
    }
    return total;
}

std::string ResidueMultiset::to_string() const {
    std::string s = "{";
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ',';
        s += cyclohecke::to_string(entries_[i]);
    }
    return s + "}";
}

bool ResidueMultiset::operator<(const ResidueMultiset& o) const {
    return std::lexicographical_compare(entries_.begin(), entries_.end(), o.entries_.begin(),
                                        o.entries_.end());
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

// Parts ordered decreasingly; each part p costs 1 + floor(p/l) toward the
// P_d(l) budget.
void p_set_rec(int budget, int max_part, int l, std::vector<int>& cur,
               std::vector<Partition>& out) {
    out.push_back(Partition(cur));
    for (int p = max_part; p >= 1; --p) {
        int cost = 1 + p / l;
        if (cost > budget) continue;
        cur.push_back(p);
        p_set_rec(budget - cost, p, l, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d) {
    if (d < 0) throw std::invalid_argument("negative d");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(d, d, cur, out);
    return out;
}

std::vector<Multipartition> enumerate_multipartitions(int d, int l) {
    if (d < 0 || l < 1) throw std::invalid_argument("need d >= 0 and l >= 1");
    std::vector<Multipartition> out;
    std::vector<Partition> cur;
    auto rec = [&](auto&& self, int remaining, int comp) -> void {
        if (comp == l) {
            if (remaining == 0) out.push_back(Multipartition(cur));
            return;
        }
        if (comp == l - 1) {
            for (const auto& p : enumerate_partitions(remaining)) {
                cur.push_back(p);
                self(self, 0, comp + 1);
                cur.pop_back();
            }
            return;
        }
        for (int k = remaining; k >= 0; --k)
            for (const auto& p : enumerate_partitions(k)) {
                cur.push_back(p);
                self(self, remaining - k, comp + 1);
                cur.pop_back();
            }
    };
    rec(rec, d, 0);
    return out;
}

bool in_p_set(const Partition& mu, int d, int l) {
    return mu.length() + mu.divided_floor(l).size() <= d;
}

std::vector<Partition> enumerate_p_set(int d, int l) {
    if (d < 0 || l < 1) throw std::invalid_argument("need d >= 0 and l >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    int max_part = d * l - 1;  // part p needs 1 + floor(p/l) <= d
    if (max_part < 0) max_part = 0;
    p_set_rec(d, max_part, l, cur, out);
    // recursion emits prefix-first; re-sort to reverse-lexicographic
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(),
                                            a.parts().end());
    });
    return out;
}

Partition phi(const Multipartition& mp, int l) {
    if (mp.level() != l) throw std::invalid_argument("level mismatch");
    std::vector<int> parts;
    for (int r = 1; r <= l; ++r)
        for (int part : mp.component(r).parts()) {
            int v = (part - 1) * l + r - 1;
            if (v > 0) parts.push_back(v);
        }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Multipartition phi_inv(const Partition& mu, int l, int d) {
    if (!in_p_set(mu, d, l)) throw std::invalid_argument("partition not in P_d(l)");
    std::vector<int> padded = mu.padded(d);
    int floor_size = mu.divided_floor(l).size();
    std::vector<std::vector<int>> comp_parts(l);
    for (int i = 0; i < d - floor_size; ++i) {
        int v = padded[i];
        int r = v % l + 1;  // v == r-1 (mod l)
        comp_parts[r - 1].push_back(v / l + 1);
    }
    std::vector<Partition> comps;
    for (auto& parts : comp_parts) {
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        comps.push_back(Partition(std::move(parts)));
    }
    return Multipartition(std::move(comps));
}

ResidueMultiset residue_tuple(const Multipartition& mp, const std::vector<Rat>& q) {
    if (mp.level() != static_cast<int>(q.size()))
        throw std::invalid_argument("level of multipartition must equal length of q");
    std::vector<Rat> entries;
    for (int r = 1; r <= mp.level(); ++r) {
        const auto& parts = mp.component(r).parts();
        for (size_t row = 0; row < parts.size(); ++row)
            for (int col = 1; col <= parts[row]; ++col)
                entries.push_back(q[r - 1] + Rat(col) - Rat(static_cast<long>(row) + 1));
    }
    return ResidueMultiset(std::move(entries));
}

mpz_class basd_rank(int d, int l) {
    if (d < 0 || l < 1) throw std::invalid_argument("need d >= 0 and l >= 1");
    Rat total = 0;
    mpz_class d_factorial = 1;
    for (int k = 2; k <= d; ++k) d_factorial *= k;
    for (const auto& lam : enumerate_partitions(d)) {
        std::map<int, int> mult;  // part value a -> r_a
        for (int p : lam.parts()) ++mult[p];
        Rat term(d_factorial);
        for (auto [a, r_a] : mult) {
            mpz_class fact = 1;
            for (int k = 2; k <= r_a; ++k) fact *= k;
            term /= Rat(fact);
            Rat ratio = rat(l, a);
            for (int k = 0; k < r_a; ++k) term *= ratio;
        }
        total += term;
    }
    if (!is_integer(total)) throw std::logic_error("basd_rank total is not an integer");
    return total.get_num();
}

Rat elementary_symmetric(const std::vector<Rat>& values, int r) {
    if (r < 0) throw std::invalid_argument("negative r");
    // e_r via the generating product prod (1 + v t), degree-truncated
    std::vector<Rat> e(r + 1, Rat(0));
    e[0] = 1;
    for (size_t i = 0; i < values.size(); ++i)
        for (int k = std::min<int>(r, static_cast<int>(i) + 1); k >= 1; --k)
            e[k] += values[i] * e[k - 1];
    return e[r];
}

bool elementary_symmetric_shift_identity(const std::vector<Rat>& u_list, const Rat& u, int r) {
    if (r < 0) throw std::invalid_argument("negative r");
    std::vector<Rat> with_u1 = u_list;
    with_u1.push_back(u + 1);
    std::vector<Rat> with_u = u_list;
    with_u.push_back(u);
    Rat lhs = elementary_symmetric(with_u1, r);
    Rat rhs = elementary_symmetric(with_u, r);
    Rat upow = 1;
    for (int s = 0; s < r; ++s) {
        Rat term = elementary_symmetric(with_u, r - 1 - s) * upow;
        rhs += (s % 2 == 0) ? term : Rat(-term);
        upow *= u;
    }
    return lhs == rhs;
}

std::vector<std::vector<int>> distinct_rearrangements(std::vector<int> tuple) {
    std::sort(tuple.begin(), tuple.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(tuple);
    } while (std::next_permutation(tuple.begin(), tuple.end()));
    return out;
}

}  // namespace cyclohecke
