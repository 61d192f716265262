#include "cyclohecke/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cyclohecke {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
            throw std::invalid_argument("not a permutation of 1..d");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int d) {
    std::vector<int> im(d);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int i, int d) {
    if (i < 1 || i >= d) throw std::invalid_argument("transposition index out of range");
    Permutation w = identity(d);
    std::swap(w.images_[i - 1], w.images_[i]);
    return w;
}

Permutation Permutation::from_cycle(const std::vector<int>& points, int d) {
    Permutation w = identity(d);
    for (size_t k = 0; k < points.size(); ++k) {
        int from = points[k], to = points[(k + 1) % points.size()];
        if (from < 1 || from > d) throw std::invalid_argument("cycle point out of range");
        w.images_[from - 1] = to;
    }
    std::vector<bool> seen(d, false);
    for (int v : w.images_) {
        if (seen[v - 1]) throw std::invalid_argument("cycle points not distinct");
        seen[v - 1] = true;
    }
    return w;
}

Permutation Permutation::operator*(const Permutation& w) const {
    if (degree() != w.degree()) throw std::invalid_argument("permutation degree mismatch");
    std::vector<int> im(images_.size());
    for (size_t i = 0; i < im.size(); ++i) im[i] = images_[w.images_[i] - 1];
    Permutation r;
    r.images_ = std::move(im);
    return r;
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) im[images_[i] - 1] = static_cast<int>(i) + 1;
    Permutation r;
    r.images_ = std::move(im);
    return r;
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

int Permutation::inversions() const {
    int n = degree(), count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (images_[i] > images_[j]) ++count;
    return count;
}

Cycle::Cycle(std::vector<int> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("empty cycle");
    std::vector<int> sorted = points_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("cycle points not distinct");
    auto mn = std::min_element(points_.begin(), points_.end());
    std::rotate(points_.begin(), mn, points_.end());
}

std::vector<int> Cycle::support() const {
    std::vector<int> s = points_;
    std::sort(s.begin(), s.end());
    return s;
}

Permutation Cycle::as_permutation(int d) const { return Permutation::from_cycle(points_, d); }

std::string Cycle::to_string() const {
    std::string s = "(";
    for (size_t k = 0; k < points_.size(); ++k) {
        if (k) s += ' ';
        s += std::to_string(points_[k]);
    }
    return s + ")";
}

std::vector<Cycle> cycle_decomposition(const Permutation& w) {
    int d = w.degree();
    std::vector<bool> seen(d, false);
    std::vector<Cycle> cycles;
    for (int start = 1; start <= d; ++start) {
        if (seen[start - 1]) continue;
        std::vector<int> pts;
        int cur = start;
        do {
            pts.push_back(cur);
            seen[cur - 1] = true;
            cur = w(cur);
        } while (cur != start);
        cycles.emplace_back(std::move(pts));
    }
    return cycles;  // already sorted: starts scan in increasing order
}

std::string cycle_string(const Permutation& w) {
    std::string s;
    for (const auto& c : cycle_decomposition(w)) {
        if (c.length() == 1) continue;
        s += c.to_string();
    }
    return s.empty() ? "()" : s;
}

std::vector<int> reduced_word(const Permutation& w) {
    // Repeatedly cancel the first descent on the right: if u has a descent
    // at i then u*s_i is shorter, and w = s_{i_k} ... s_{i_1} for the
    // letters collected along the way.
    Permutation u = w;
    std::vector<int> letters;
    int d = w.degree();
    for (;;) {
        int descent = 0;
        for (int i = 1; i < d; ++i)
            if (u(i) > u(i + 1)) {
                descent = i;
                break;
            }
        if (descent == 0) break;
        u = u * Permutation::transposition(descent, d);
        letters.push_back(descent);
    }
    std::reverse(letters.begin(), letters.end());
    return letters;
}

Permutation product_of_word(const std::vector<int>& word, int d) {
    Permutation w = Permutation::identity(d);
    for (int i : word) w = w * Permutation::transposition(i, d);
    return w;
}

std::vector<Permutation> all_permutations(int d) {
    std::vector<int> im(d);
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::vector<Permutation> coset_representatives(int d_prime, int d_double_prime) {
    if (d_prime < 0 || d_double_prime < 0) throw std::invalid_argument("negative block size");
    int d = d_prime + d_double_prime;
    // Choose the image set of positions 1..d' in lexicographic order and
    // fill both blocks increasingly.
    std::vector<Permutation> reps;
    std::vector<int> choose(d_prime);
    std::iota(choose.begin(), choose.end(), 1);
    auto emit = [&](const std::vector<int>& first_block) {
        std::vector<int> im(d);
        std::vector<bool> used(d + 1, false);
        for (int k = 0; k < d_prime; ++k) {
            im[k] = first_block[k];
            used[first_block[k]] = true;
        }
        int pos = d_prime;
        for (int v = 1; v <= d; ++v)
            if (!used[v]) im[pos++] = v;
        reps.push_back(Permutation(std::move(im)));
    };
    if (d_prime == 0) {
        emit({});
        return reps;
    }
    for (;;) {
        emit(choose);
        int k = d_prime - 1;
        while (k >= 0 && choose[k] == d - (d_prime - 1 - k)) --k;
        if (k < 0) break;
        ++choose[k];
        for (int j = k + 1; j < d_prime; ++j) choose[j] = choose[j - 1] + 1;
    }
    return reps;
}

std::pair<Permutation, Permutation> coset_decompose(const Permutation& u, int d_prime) {
    int d = u.degree();
    std::vector<int> first(u.images().begin(), u.images().begin() + d_prime);
    std::vector<int> second(u.images().begin() + d_prime, u.images().end());
    std::vector<int> fs = first, ss = second;
    std::sort(fs.begin(), fs.end());
    std::sort(ss.begin(), ss.end());
    std::vector<int> rep_im(d), p_im(d);
    for (int k = 0; k < d_prime; ++k) rep_im[k] = fs[k];
    for (int k = d_prime; k < d; ++k) rep_im[k] = ss[k - d_prime];
    for (int k = 0; k < d_prime; ++k) {
        int pos = static_cast<int>(std::lower_bound(fs.begin(), fs.end(), first[k]) - fs.begin());
        p_im[k] = pos + 1;
    }
    for (int k = 0; k < d - d_prime; ++k) {
        int pos = static_cast<int>(std::lower_bound(ss.begin(), ss.end(), second[k]) - ss.begin());
        p_im[d_prime + k] = d_prime + pos + 1;
    }
    return {Permutation(std::move(rep_im)), Permutation(std::move(p_im))};
}

}  // namespace cyclohecke
