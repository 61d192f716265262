#include "cyclohecke/graded.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace cyclohecke {

namespace {

// All tuples of length `parts` with entries in [0, max_each] summing to
// `total`, lexicographic.
void compositions_rec(int total, int parts, int max_each, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int v = 0; v <= std::min(total, max_each); ++v) {
        cur.push_back(v);
        compositions_rec(total - v, parts - 1, max_each, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> compositions(int total, int parts, int max_each) {
    std::vector<std::vector<int>> out;
    if (total < 0) return out;
    std::vector<int> cur;
    compositions_rec(total, parts, max_each, cur, out);
    return out;
}

std::string monomial_string(const std::vector<int>& exps) {
    std::string s;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += "x" + std::to_string(i + 1);
        if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
    }
    return s;
}

}  // namespace

GradedElement GradedElement::one(int d, int l) {
    GradedElement e(d, l);
    e.add(Term{std::vector<int>(d, 0), Permutation::identity(d)}, 1);
    return e;
}

GradedElement GradedElement::variable(int i, int d, int l) {
    if (i < 1 || i > d) throw std::invalid_argument("variable index out of range");
    GradedElement e(d, l);
    if (l < 2) return e;  // x_i = 0 when l = 1
    std::vector<int> exps(d, 0);
    exps[i - 1] = 1;
    e.add(Term{std::move(exps), Permutation::identity(d)}, 1);
    return e;
}

GradedElement GradedElement::from_permutation(const Permutation& w, int l) {
    GradedElement e(w.degree(), l);
    e.add(Term{std::vector<int>(w.degree(), 0), w}, 1);
    return e;
}

GradedElement GradedElement::monomial(const Term& t, const Rat& c, int d, int l) {
    GradedElement e(d, l);
    for (int v : t.exps)
        if (v < 0 || v >= l) throw std::invalid_argument("exponent outside {0..l-1}");
    e.add(t, c);
    return e;
}

Rat GradedElement::coefficient(const Term& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rat(0) : it->second;
}

int GradedElement::degree() const {
    int deg = -1;
    for (const auto& [t, c] : terms_) deg = std::max(deg, t.degree());
    return deg;
}

GradedElement GradedElement::homogeneous_component(int r) const {
    GradedElement e(d_, l_);
    for (const auto& [t, c] : terms_)
        if (t.degree() == r) e.add(t, c);
    return e;
}

void GradedElement::check_compatible(const GradedElement& o) const {
    if (d_ != o.d_ || l_ != o.l_) throw std::invalid_argument("graded algebra parameter mismatch");
}

GradedElement GradedElement::operator+(const GradedElement& o) const {
    check_compatible(o);
    GradedElement r = *this;
    for (const auto& [t, c] : o.terms_) r.add(t, c);
    return r;
}

GradedElement GradedElement::operator-(const GradedElement& o) const {
    check_compatible(o);
    GradedElement r = *this;
    for (const auto& [t, c] : o.terms_) r.add(t, -c);
    return r;
}

GradedElement GradedElement::operator*(const Rat& c) const {
    GradedElement r(d_, l_);
    if (c == 0) return r;
    for (const auto& [t, v] : terms_) r.terms_.emplace(t, v * c);
    return r;
}

GradedElement GradedElement::operator*(const GradedElement& o) const {
    check_compatible(o);
    GradedElement r(d_, l_);
    for (const auto& [ta, ca] : terms_)
        for (const auto& [tb, cb] : o.terms_) {
            // (x^a v)(x^b w) = x^a (v . x^b) v w with v . x_i = x_{v(i)};
            // any exponent reaching l kills the term.
            std::vector<int> exps = ta.exps;
            bool dead = false;
            for (int i = 1; i <= d_; ++i) {
                int img = ta.perm(i);
                exps[img - 1] += tb.exps[i - 1];
                if (exps[img - 1] >= l_) {
                    dead = true;
                    break;
                }
            }
            if (dead) continue;
            r.add(Term{std::move(exps), ta.perm * tb.perm}, ca * cb);
        }
    return r;
}

bool GradedElement::operator==(const GradedElement& o) const {
    return d_ == o.d_ && l_ == o.l_ && terms_ == o.terms_;
}

std::string GradedElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->second;
        Rat abs = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) s += "-";
            first = false;
        } else {
            s += c < 0 ? " - " : " + ";
        }
        std::string mono = monomial_string(it->first.exps);
        std::string perm = it->first.perm.is_identity() ? "" : cycle_string(it->first.perm);
        std::string body;
        if (!mono.empty()) body = mono;
        if (!perm.empty()) body += (body.empty() ? "" : "*") + perm;
        if (abs != 1 || body.empty()) {
            s += cyclohecke::to_string(abs);
            if (!body.empty()) s += "*";
        }
        s += body;
    }
    return s;
}

ColoredCycle::ColoredCycle(Cycle c, int r, int l) : cycle(std::move(c)), color(r) {
    if (r < 0 || r >= l) throw std::invalid_argument("color must lie in {0..l-1}");
}

bool ColoredCycleProduct::operator==(const ColoredCycleProduct& o) const {
    if (scalar == 0 || o.scalar == 0) return scalar == 0 && o.scalar == 0;
    return scalar == o.scalar && cycles == o.cycles;
}

GradedElement h_poly(int r, const std::vector<int>& indices, int d, int l) {
    if (indices.empty()) throw std::invalid_argument("h_poly needs a non-empty index set");
    if (r < 0) throw std::invalid_argument("negative color");
    std::set<int> distinct(indices.begin(), indices.end());
    if (distinct.size() != indices.size()) throw std::invalid_argument("h_poly indices not distinct");
    for (int i : indices)
        if (i < 1 || i > d) throw std::invalid_argument("h_poly index out of range");
    int a = static_cast<int>(indices.size());
    int degree = (a - 1) * (l - 1) + r;
    GradedElement e(d, l);
    for (const auto& comp : compositions(degree, a, l - 1)) {
        std::vector<int> exps(d, 0);
        for (int k = 0; k < a; ++k) exps[indices[k] - 1] = comp[k];
        e.add(Term{std::move(exps), Permutation::identity(d)}, 1);
    }
    return e;  // empty (zero) when r >= l, by pigeonhole
}

GradedElement colored_cycle_element(const ColoredCycle& c, int d, int l) {
    GradedElement h = h_poly(c.color, c.cycle.points(), d, l);
    return h * GradedElement::from_permutation(c.cycle.as_permutation(d), l);
}

GradedElement disjoint_product_element(const std::vector<ColoredCycle>& cycles, const Rat& scalar,
                                       int d, int l) {
    GradedElement e = GradedElement::one(d, l) * scalar;
    for (const auto& c : cycles) e = e * colored_cycle_element(c, d, l);
    return e;
}

std::vector<ColoredCycle> normalize_disjoint(std::vector<ColoredCycle> cycles) {
    std::vector<ColoredCycle> out;
    for (auto& c : cycles)
        if (!(c.cycle.length() == 1 && c.color == 0)) out.push_back(std::move(c));
    std::sort(out.begin(), out.end(), [](const ColoredCycle& a, const ColoredCycle& b) {
        return a.cycle.min_point() < b.cycle.min_point();
    });
    return out;
}

ColoredCycleProduct colored_cycle_product(const ColoredCycle& a, const ColoredCycle& b, int d,
                                          int l) {
    std::vector<int> sa = a.cycle.support(), sb = b.cycle.support();
    std::vector<int> common, united;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
    std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(united));
    int c = static_cast<int>(common.size());
    if (c == 0) return {Rat(1), normalize_disjoint({a, b})};
    Permutation prod = a.cycle.as_permutation(d) * b.cycle.as_permutation(d);
    if (c == 1) {
        if (a.color + b.color >= l) return {Rat(0), {}};
        // the product is a single cycle whose support is exactly the union
        for (const auto& cyc : cycle_decomposition(prod)) {
            if (cyc.min_point() == united.front()) {
                if (cyc.support() != united)
                    throw std::logic_error("one-point overlap did not merge into a single cycle");
                return {Rat(1), normalize_disjoint({ColoredCycle(cyc, a.color + b.color, l)})};
            }
        }
        throw std::logic_error("one-point overlap did not merge into a single cycle");
    }
    if (a.color + b.color != 0) return {Rat(0), {}};
    // c >= 2, both colors zero: l^{c-1} h_{(c-1)(l-1)}(A u B) AB, which is
    // zero by pigeonhole unless c = 2 or l = 1, and otherwise re-expresses
    // as everything on the union colored l-1
    if ((c - 1) * (l - 1) >= l) return {Rat(0), {}};
    Rat scalar = 1;
    for (int k = 1; k < c; ++k) scalar *= l;
    std::vector<ColoredCycle> out;
    std::set<int> in_union(united.begin(), united.end());
    for (const auto& cyc : cycle_decomposition(prod)) {
        if (!in_union.count(cyc.min_point())) continue;
        out.emplace_back(cyc, l - 1, l);
    }
    return {scalar, normalize_disjoint(std::move(out))};
}

std::vector<std::vector<ColoredCycle>> products_of_type(const Multipartition& mp, int d, int l) {
    if (mp.level() != l) throw std::invalid_argument("level mismatch");
    if (mp.total_size() != d) throw std::invalid_argument("cycle type must have total size d");
    // required multiset of (length, color) pairs, including (1,0) padding
    std::map<std::pair<int, int>, int> need;
    for (int r = 1; r <= l; ++r)
        for (int part : mp.component(r).parts()) ++need[{part, r - 1}];
    std::vector<std::vector<ColoredCycle>> out;
    for (const auto& w : all_permutations(d)) {
        auto cycles = cycle_decomposition(w);
        std::vector<ColoredCycle> chosen;
        auto assign = [&](auto&& self, size_t k) -> void {
            if (k == cycles.size()) {
                out.push_back(normalize_disjoint(chosen));
                return;
            }
            int len = cycles[k].length();
            for (int color = 0; color < l; ++color) {
                auto it = need.find({len, color});
                if (it == need.end() || it->second == 0) continue;
                --it->second;
                chosen.emplace_back(cycles[k], color, l);
                self(self, k + 1);
                chosen.pop_back();
                ++it->second;
            }
        };
        assign(assign, 0);
    }
    return out;
}

GradedElement class_sum(const Multipartition& mp, int d, int l) {
    GradedElement z(d, l);
    for (const auto& cycles : products_of_type(mp, d, l))
        z = z + disjoint_product_element(cycles, 1, d, l);
    return z;
}

GradedElement y_element(int i, int k, int d, int l) {
    if (i < 1 || i > d) throw std::invalid_argument("index out of range");
    if (k < 0) throw std::invalid_argument("negative k");
    int a = k / l + 1, r = k % l;
    GradedElement e(d, l);
    // ordered tuples of a-1 distinct points below i
    std::vector<int> tuple;
    std::vector<bool> used(i, false);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(tuple.size()) == a - 1) {
            std::vector<int> pts = tuple;
            pts.push_back(i);
            e = e + colored_cycle_element(ColoredCycle(Cycle(pts), r, l), d, l);
            return;
        }
        for (int j = 1; j < i; ++j) {
            if (used[j]) continue;
            used[j] = true;
            tuple.push_back(j);
            self(self);
            tuple.pop_back();
            used[j] = false;
        }
    };
    rec(rec);
    return e;  // empty sum when a-1 > i-1, i.e. k >= i l
}

GradedElement murphy_element(const Partition& mu, int d, int l) {
    if (!in_p_set(mu, d, l)) throw std::invalid_argument("partition not in P_d(l)");
    GradedElement m(d, l);
    for (const auto& nu : distinct_rearrangements(mu.padded(d))) {
        GradedElement prod = GradedElement::one(d, l);
        for (int i = 1; i <= d; ++i) prod = prod * y_element(i, nu[i - 1], d, l);
        m = m + prod;
    }
    return m;
}

namespace {

// Joint kernel of a family of linear maps on the monomial basis,
// intersected one map at a time so later (denser) maps only ever see the
// small space cut out by the earlier ones.
std::vector<Vec> joint_kernel(const MonomialBasis& basis,
                              const std::vector<std::function<TermMap(const TermMap&)>>& maps) {
    int n = basis.size();
    std::vector<Vec> kernel;
    bool first = true;
    for (const auto& map : maps) {
        int k = first ? n : static_cast<int>(kernel.size());
        Matrix a(n, k);
        for (int j = 0; j < k; ++j) {
            TermMap input;
            if (first)
                input.emplace(basis.term(j), Rat(1));
            else
                input = basis.from_vector(kernel[j]);
            Vec col = basis.to_vector(map(input));
            for (int i = 0; i < n; ++i)
                if (col[i] != 0) a.at(i, j) = col[i];
        }
        auto coords = nullspace_basis(a);
        std::vector<Vec> next;
        for (const auto& co : coords) {
            Vec v(n, Rat(0));
            for (int j = 0; j < k; ++j) {
                if (co[j] == 0) continue;
                if (first)
                    v[j] += co[j];
                else
                    for (int i = 0; i < n; ++i)
                        if (kernel[j][i] != 0) v[i] += co[j] * kernel[j][i];
            }
            next.push_back(std::move(v));
        }
        kernel = std::move(next);
        first = false;
        if (kernel.empty()) break;
    }
    if (first) {  // no maps: everything
        kernel.resize(n, Vec(n, Rat(0)));
        for (int i = 0; i < n; ++i) kernel[i][i] = 1;
    }
    return kernel;
}

GradedElement element_from_map(const TermMap& m, int d, int l) {
    GradedElement e(d, l);
    for (const auto& [t, c] : m) e.add(t, c);
    return e;
}

}  // namespace

std::vector<GradedElement> centralizer_basis(int d, int l) {
    MonomialBasis basis(d, l);
    std::vector<std::function<TermMap(const TermMap&)>> maps;
    for (int i = 1; i <= d; ++i) {
        GradedElement xi = GradedElement::variable(i, d, l);
        maps.push_back([=](const TermMap& m) {
            GradedElement z = element_from_map(m, d, l);
            return ((xi * z) - (z * xi)).terms();
        });
    }
    std::vector<GradedElement> out;
    for (const auto& v : joint_kernel(basis, maps)) out.push_back(element_from_map(basis.from_vector(v), d, l));
    if (mpz_class(static_cast<long>(out.size())) != basd_rank(d, l))
        throw std::logic_error("centralizer dimension disagrees with the rank formula");
    return out;
}

std::vector<GradedElement> center_basis_bruteforce(int d, int l) {
    if (d < 1) {
        return {GradedElement::one(0, l)};
    }
    MonomialBasis basis(d, l);
    std::vector<std::function<TermMap(const TermMap&)>> maps;
    for (int i = 1; i < d; ++i) {
        GradedElement si = GradedElement::from_permutation(Permutation::transposition(i, d), l);
        maps.push_back([=](const TermMap& m) {
            GradedElement z = element_from_map(m, d, l);
            return ((si * z) - (z * si)).terms();
        });
    }
    GradedElement x1 = GradedElement::variable(1, d, l);
    maps.push_back([=](const TermMap& m) {
        GradedElement z = element_from_map(m, d, l);
        return ((x1 * z) - (z * x1)).terms();
    });
    std::vector<GradedElement> out;
    for (const auto& v : joint_kernel(basis, maps)) out.push_back(element_from_map(basis.from_vector(v), d, l));
    if (out.size() != enumerate_multipartitions(d, l).size())
        throw std::logic_error("graded center dimension does not match the multipartition count");
    return out;
}

}  // namespace cyclohecke
