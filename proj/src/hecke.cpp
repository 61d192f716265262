#include "cyclohecke/hecke.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cyclohecke {

namespace {

// ---- straightening primitives on raw term maps -------------------------
//
// The rewrite rules are the defining relations read left to right:
//   s_i x_{i+1} = x_i s_i + 1
//   s_i x_i     = x_{i+1} s_i - 1
//   s_i x_j     = x_j s_i            (j != i, i+1)
// plus the cyclotomic reduction of x_m^l. Every routine keeps exponents
// below l and permutations as plain S_d factors on the right.

// c * x^exps * w with arbitrary exponents, reduced into `out`.
void reduce_monomial_into(const CyclotomicSpec& spec, std::vector<int> exps, const Permutation& w,
                          const Rat& c, TermMap& out) {
    int l = spec.l();
    int m = -1;
    for (int i = 0; i < spec.d(); ++i)
        if (exps[i] >= l) {
            m = i;
            break;
        }
    if (m < 0) {
        add_term(out, Term{std::move(exps), w}, c);
        return;
    }
    exps[m] -= l;
    // x^exps' * x_{m+1}^l * w, with x_{m+1}^l already in normal form
    for (const auto& [t, ct] : spec.xl_normal_form(m + 1)) {
        std::vector<int> merged = exps;
        for (int i = 0; i < spec.d(); ++i) merged[i] += t.exps[i];
        reduce_monomial_into(spec, std::move(merged), t.perm * w, c * ct, out);
    }
}

// s_i * x^exps, as terms (exps', maybe-s_i-on-the-right) fed to `emit`.
// Uses s x_i^a x_{i+1}^b = x_i^b x_{i+1}^a s
//   + sum_{p+q=b-1} x_i^p x_{i+1}^{q+a} - sum_{t+u=a-1} x_i^u x_{i+1}^{t+b}.
void s_times_monomial(int i, const std::vector<int>& exps,
                      const std::function<void(std::vector<int>, bool, int)>& emit) {
    int a = exps[i - 1], b = exps[i];
    std::vector<int> swapped = exps;
    std::swap(swapped[i - 1], swapped[i]);
    emit(std::move(swapped), true, +1);
    for (int p = 0; p <= b - 1; ++p) {
        std::vector<int> e = exps;
        e[i - 1] = p;
        e[i] = (b - 1 - p) + a;
        emit(std::move(e), false, +1);
    }
    for (int t = 0; t <= a - 1; ++t) {
        std::vector<int> e = exps;
        e[i - 1] = a - 1 - t;
        e[i] = t + b;
        emit(std::move(e), false, -1);
    }
}

TermMap mul_left_s(const CyclotomicSpec& spec, int i, const TermMap& m) {
    TermMap out;
    Permutation si = Permutation::transposition(i, spec.d());
    for (const auto& [t, c] : m) {
        const Rat& coeff = c;
        const Permutation& v = t.perm;
        s_times_monomial(i, t.exps, [&](std::vector<int> exps, bool with_s, int sign) {
            Permutation perm = with_s ? si * v : v;
            reduce_monomial_into(spec, std::move(exps), perm, sign > 0 ? coeff : Rat(-coeff), out);
        });
    }
    return out;
}

TermMap mul_left_x(const CyclotomicSpec& spec, int j, const TermMap& m) {
    TermMap out;
    for (const auto& [t, c] : m) {
        std::vector<int> exps = t.exps;
        ++exps[j - 1];
        reduce_monomial_into(spec, std::move(exps), t.perm, c, out);
    }
    return out;
}

TermMap mul_right_perm(const TermMap& m, const Permutation& w) {
    TermMap out;
    for (const auto& [t, c] : m) add_term(out, Term{t.exps, t.perm * w}, c);
    return out;
}

TermMap mul_right_x(const CyclotomicSpec& spec, const TermMap& m, int j) {
    TermMap out;
    for (const auto& [t, c] : m) {
        PermTimesX px = perm_times_x(t.perm, j);
        std::vector<int> exps = t.exps;
        ++exps[px.leading_index - 1];
        reduce_monomial_into(spec, std::move(exps), t.perm, c, out);
        for (const auto& [sign, u] : px.corrections)
            add_term(out, Term{t.exps, u}, sign > 0 ? c : Rat(-c));
    }
    return out;
}

TermMap mul_generic(const CyclotomicSpec& spec, const TermMap& a, const TermMap& b) {
    TermMap out;
    for (const auto& [tb, cb] : b) {
        TermMap acc = a;
        for (int j = 1; j <= spec.d(); ++j)
            for (int rep = 0; rep < tb.exps[j - 1]; ++rep) acc = mul_right_x(spec, acc, j);
        acc = mul_right_perm(acc, tb.perm);
        for (const auto& [t, c] : acc) add_term(out, t, c * cb);
    }
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

std::string s_word_string(const Permutation& w) {
    std::string s;
    for (int i : reduced_word(w)) {
        if (!s.empty()) s += '*';
        s += "s" + std::to_string(i);
    }
    return s;
}

}  // namespace

HeckeElement element_from_terms(SpecPtr spec, TermMap terms) {
    HeckeElement e(std::move(spec));
    e.terms_ = std::move(terms);
    return e;
}

PermTimesX perm_times_x(const Permutation& v, int j) {
    // crossing the letter at position t of a reduced word drops both the
    // x and that letter
    int d = v.degree();
    std::vector<int> word = reduced_word(v);
    int k = static_cast<int>(word.size());
    std::vector<Permutation> prefix(k + 1, Permutation::identity(d));
    for (int t = 1; t <= k; ++t) prefix[t] = prefix[t - 1] * Permutation::transposition(word[t - 1], d);
    std::vector<Permutation> suffix(k + 2, Permutation::identity(d));
    for (int t = k; t >= 1; --t) suffix[t] = Permutation::transposition(word[t - 1], d) * suffix[t + 1];
    PermTimesX res;
    res.leading_index = v(j);
    for (int t = k; t >= 1; --t) {
        int m = suffix[t + 1](j);  // x index before crossing letter t
        int a = word[t - 1];
        int sign = m == a + 1 ? +1 : (m == a ? -1 : 0);
        if (sign != 0) res.corrections.emplace_back(sign, prefix[t - 1] * suffix[t + 1]);
    }
    return res;
}

CyclotomicSpec::CyclotomicSpec(int d, std::vector<Rat> coeffs, std::optional<std::vector<Rat>> roots)
    : d_(d), coeffs_(std::move(coeffs)), roots_(std::move(roots)) {
    if (d_ < 0) throw std::invalid_argument("rank must be non-negative");
    if (coeffs_.empty()) throw std::invalid_argument("level must be at least 1");
    int l = static_cast<int>(coeffs_.size());
    xl_.resize(d_);
    if (d_ == 0) return;
    // x_1^l = -c_1 x_1^{l-1} - ... - c_l
    Permutation id = Permutation::identity(d_);
    for (int t = 1; t <= l; ++t) {
        if (coeffs_[t - 1] == 0) continue;
        std::vector<int> exps(d_, 0);
        exps[0] = l - t;
        add_term(xl_[0], Term{std::move(exps), id}, -coeffs_[t - 1]);
    }
    // x_{m+1}^l = s_m x_m^l s_m + sum_t x_m^t x_{m+1}^{l-1-t} s_m
    for (int m = 1; m < d_; ++m) {
        Permutation sm = Permutation::transposition(m, d_);
        TermMap cur = mul_left_s(*this, m, xl_[m - 1]);
        cur = mul_right_perm(cur, sm);
        for (int t = 0; t <= l - 1; ++t) {
            std::vector<int> exps(d_, 0);
            exps[m - 1] = t;
            exps[m] = l - 1 - t;
            add_term(cur, Term{std::move(exps), sm}, 1);
        }
        xl_[m] = std::move(cur);
    }
}

std::shared_ptr<const CyclotomicSpec> CyclotomicSpec::from_coeffs(int d, std::vector<Rat> coeffs) {
    return std::shared_ptr<const CyclotomicSpec>(
        new CyclotomicSpec(d, std::move(coeffs), std::nullopt));
}

std::shared_ptr<const CyclotomicSpec> CyclotomicSpec::from_roots(int d, std::vector<Rat> roots) {
    if (roots.empty()) throw std::invalid_argument("need at least one root");
    // expand prod (x - q_i) exactly
    std::vector<Rat> poly{Rat(1)};  // leading coefficient first
    for (const auto& q : roots) {
        std::vector<Rat> next(poly.size() + 1, Rat(0));
        for (size_t k = 0; k < poly.size(); ++k) {
            next[k] += poly[k];
            next[k + 1] -= poly[k] * q;
        }
        poly = std::move(next);
    }
    std::vector<Rat> coeffs(poly.begin() + 1, poly.end());
    return std::shared_ptr<const CyclotomicSpec>(
        new CyclotomicSpec(d, std::move(coeffs), std::move(roots)));
}

std::string CyclotomicSpec::to_string() const {
    std::string s = "d=" + std::to_string(d_) + " l=" + std::to_string(l());
    if (roots_) {
        s += " roots=";
        for (size_t i = 0; i < roots_->size(); ++i) {
            if (i) s += ',';
            s += cyclohecke::to_string((*roots_)[i]);
        }
    } else {
        s += " coeffs=";
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) s += ',';
            s += cyclohecke::to_string(coeffs_[i]);
        }
    }
    return s;
}

HeckeElement HeckeElement::one(SpecPtr spec) {
    HeckeElement e(spec);
    e.terms_.emplace(Term{std::vector<int>(spec->d(), 0), Permutation::identity(spec->d())}, Rat(1));
    return e;
}

HeckeElement HeckeElement::generator_x(int i, SpecPtr spec) {
    if (i < 1 || i > spec->d()) throw std::invalid_argument("generator index out of range");
    std::vector<int> exps(spec->d(), 0);
    exps[i - 1] = 1;
    Permutation id = Permutation::identity(spec->d());
    return monomial(exps, id, 1, std::move(spec));
}

HeckeElement HeckeElement::generator_s(int i, SpecPtr spec) {
    if (i < 1 || i >= spec->d()) throw std::invalid_argument("generator index out of range");
    Permutation si = Permutation::transposition(i, spec->d());
    return from_permutation(si, std::move(spec));
}

HeckeElement HeckeElement::from_permutation(const Permutation& w, SpecPtr spec) {
    if (w.degree() != spec->d()) throw std::invalid_argument("permutation degree mismatch");
    HeckeElement e(spec);
    e.terms_.emplace(Term{std::vector<int>(spec->d(), 0), w}, Rat(1));
    return e;
}

HeckeElement HeckeElement::scalar(const Rat& c, SpecPtr spec) {
    HeckeElement e(spec);
    if (c != 0)
        e.terms_.emplace(Term{std::vector<int>(spec->d(), 0), Permutation::identity(spec->d())}, c);
    return e;
}

HeckeElement HeckeElement::monomial(const std::vector<int>& exps, const Permutation& w, const Rat& c,
                                    SpecPtr spec) {
    if (static_cast<int>(exps.size()) != spec->d()) throw std::invalid_argument("exponent length");
    for (int v : exps)
        if (v < 0) throw std::invalid_argument("negative exponent");
    HeckeElement e(spec);
    reduce_monomial_into(*spec, exps, w, c, e.terms_);
    return e;
}

Rat HeckeElement::coefficient(const Term& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rat(0) : it->second;
}

static void check_spec(const HeckeElement& a, const HeckeElement& b) {
    if (!a.spec() || !b.spec() || !a.spec()->same_as(*b.spec()))
        throw std::invalid_argument("cyclotomic spec mismatch");
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
    check_spec(*this, o);
    HeckeElement r = *this;
    for (const auto& [t, c] : o.terms_) add_term(r.terms_, t, c);
    return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
    check_spec(*this, o);
    HeckeElement r = *this;
    for (const auto& [t, c] : o.terms_) add_term(r.terms_, t, -c);
    return r;
}

HeckeElement HeckeElement::operator*(const HeckeElement& o) const {
    check_spec(*this, o);
    return element_from_terms(spec_, mul_generic(*spec_, terms_, o.terms_));
}

HeckeElement HeckeElement::operator*(const Rat& c) const {
    HeckeElement r(spec_);
    if (c == 0) return r;
    for (const auto& [t, v] : terms_) r.terms_.emplace(t, v * c);
    return r;
}

bool HeckeElement::operator==(const HeckeElement& o) const {
    check_spec(*this, o);
    return terms_ == o.terms_;
}

HeckeElement HeckeElement::times_x(int j) const {
    return element_from_terms(spec_, mul_right_x(*spec_, terms_, j));
}

HeckeElement HeckeElement::times_s(int i) const {
    return element_from_terms(
        spec_, mul_right_perm(terms_, Permutation::transposition(i, spec_->d())));
}

HeckeElement HeckeElement::x_times(int j) const {
    return element_from_terms(spec_, mul_left_x(*spec_, j, terms_));
}

HeckeElement HeckeElement::s_times(int i) const {
    return element_from_terms(spec_, mul_left_s(*spec_, i, terms_));
}

int HeckeElement::filtration_degree() const {
    int deg = -1;
    for (const auto& [t, c] : terms_) deg = std::max(deg, t.degree());
    return deg;
}

GradedElement HeckeElement::gr_component(int r) const {
    if (r != filtration_degree())
        throw std::invalid_argument("gr_component: r is not the top filtration degree");
    GradedElement g(spec_->d(), spec_->l());
    for (const auto& [t, c] : terms_)
        if (t.degree() == r) g.add(t, c);
    return g;
}

std::string HeckeElement::to_string() const {
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
        std::string perm = s_word_string(it->first.perm);
        std::string body = mono;
        if (!perm.empty()) body += (body.empty() ? "" : "*") + perm;
        if (abs != 1 || body.empty()) {
            s += cyclohecke::to_string(abs);
            if (!body.empty()) s += "*";
        }
        s += body;
    }
    return s;
}

HeckeElement reduce_high_power(int i, int k, const SpecPtr& spec) {
    if (i < 1 || i > spec->d()) throw std::invalid_argument("index out of range");
    if (k < 0) throw std::invalid_argument("negative power");
    std::vector<int> exps(spec->d(), 0);
    exps[i - 1] = k;
    return HeckeElement::monomial(exps, Permutation::identity(spec->d()), 1, spec);
}

HeckeElement p_element(const Partition& mu, const SpecPtr& spec) {
    if (mu.length() > spec->d()) throw std::invalid_argument("partition longer than rank");
    HeckeElement p = HeckeElement::zero(spec);
    for (const auto& nu : distinct_rearrangements(mu.padded(spec->d())))
        p = p + HeckeElement::monomial(nu, Permutation::identity(spec->d()), 1, spec);
    return p;
}

namespace {

std::vector<Vec> hecke_joint_kernel(const SpecPtr& spec, const MonomialBasis& basis) {
    int d = spec->d();
    int n = basis.size();
    std::vector<std::function<HeckeElement(const HeckeElement&)>> maps;
    for (int i = 1; i < d; ++i)
        maps.push_back([i](const HeckeElement& z) { return z.s_times(i) - z.times_s(i); });
    if (d >= 1)
        maps.push_back([](const HeckeElement& z) { return z.x_times(1) - z.times_x(1); });
    std::vector<Vec> kernel;
    if (maps.empty()) {
        kernel.resize(n, Vec(n, Rat(0)));
        for (int i = 0; i < n; ++i) kernel[i][i] = 1;
        return kernel;
    }
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
            Vec col = basis.to_vector(map(element_from_terms(spec, std::move(input))).terms());
            for (int r = 0; r < n; ++r)
                if (col[r] != 0) a.at(r, j) = col[r];
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
                    for (int r = 0; r < n; ++r)
                        if (kernel[j][r] != 0) v[r] += co[j] * kernel[j][r];
            }
            next.push_back(std::move(v));
        }
        kernel = std::move(next);
        first = false;
        if (kernel.empty()) break;
    }
    return kernel;
}

}  // namespace

std::vector<HeckeElement> center_basis_raw(const SpecPtr& spec) {
    MonomialBasis basis(spec->d(), spec->l());
    std::vector<HeckeElement> out;
    for (const auto& v : hecke_joint_kernel(spec, basis))
        out.push_back(element_from_terms(spec, basis.from_vector(v)));
    return out;
}

std::vector<HeckeElement> center_basis_bruteforce(const SpecPtr& spec) {
    MonomialBasis basis(spec->d(), spec->l());
    auto center = center_basis_raw(spec);
    size_t expected = enumerate_multipartitions(spec->d(), spec->l()).size();
    if (center.size() != expected)
        throw std::logic_error("center dimension does not match the multipartition count");
    // span{p_d(mu)} must coincide with the kernel
    RowSpace p_span(basis.size());
    for (const auto& mu : enumerate_p_set(spec->d(), spec->l()))
        p_span.insert(basis.to_vector(p_element(mu, spec).terms()));
    if (p_span.dim() != static_cast<int>(expected))
        throw std::logic_error("p_d(mu) family is not linearly independent of full rank");
    for (const auto& z : center)
        if (!p_span.contains(basis.to_vector(z.terms())))
            throw std::logic_error("brute-force center is not spanned by the p_d(mu)");
    return center;
}

bool power_sum_generation_check(const SpecPtr& spec) {
    MonomialBasis basis(spec->d(), spec->l());
    auto center = center_basis_raw(spec);
    RowSpace target(basis.size());
    for (const auto& z : center) target.insert(basis.to_vector(z.terms()));

    std::vector<HeckeElement> gens;
    for (int r = 1; r <= spec->d(); ++r) gens.push_back(p_element(Partition({r}), spec));

    std::vector<HeckeElement> pool{HeckeElement::one(spec)};
    RowSpace span(basis.size());
    span.insert(basis.to_vector(pool[0].terms()));
    for (const auto& g : gens)
        if (span.insert(basis.to_vector(g.terms()))) pool.push_back(g);
    // saturate under multiplication by the generators
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<HeckeElement> fresh;
        for (const auto& z : pool)
            for (const auto& g : gens) {
                HeckeElement prod = z * g;
                if (span.insert(basis.to_vector(prod.terms()))) {
                    fresh.push_back(prod);
                    grew = true;
                }
            }
        for (auto& f : fresh) pool.push_back(std::move(f));
    }
    if (span.dim() != target.dim()) return false;
    for (const auto& z : center)
        if (!span.contains(basis.to_vector(z.terms()))) return false;
    return true;
}

}  // namespace cyclohecke
