#include "strata/root_system.hpp"

#include "strata/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace strata {

using exact::Int;

std::string SimpleType::str() const {
    return std::string(1, char(family)) + std::to_string(rank);
}

namespace {

void validate_component(const SimpleType& t) {
    const int r = t.rank;
    switch (t.family) {
        case Family::A: if (r >= 1) return; break;
        case Family::B:
        case Family::C: if (r >= 1) return; break;  // rank 1 folds to A1 below
        case Family::D: if (r >= 2) return; break;
        case Family::E: if (r >= 6 && r <= 8) return; break;
        case Family::F: if (r == 4) return; break;
        case Family::G: if (r == 2) return; break;
    }
    throw ParseError("invalid type component: " + t.str());
}

// Coincidence folding shared by TypeSpec canonicalization and TypeLabel:
// rank-1 -> A1, C2 -> B2, D2 -> A1 A1, D3 -> A3.
void fold_component(const SimpleType& t, std::vector<SimpleType>& out) {
    if (t.rank == 1) {
        out.push_back({Family::A, 1});
    } else if (t.family == Family::C && t.rank == 2) {
        out.push_back({Family::B, 2});
    } else if (t.family == Family::D && t.rank == 2) {
        out.push_back({Family::A, 1});
        out.push_back({Family::A, 1});
    } else if (t.family == Family::D && t.rank == 3) {
        out.push_back({Family::A, 3});
    } else {
        out.push_back(t);
    }
}

std::string render_components(const std::vector<SimpleType>& sorted) {
    if (sorted.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        os << sorted[i].str();
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

}  // namespace

TypeSpec::TypeSpec(std::vector<SimpleType> components) {
    if (components.empty()) throw ParseError("empty type");
    for (const auto& c : components) validate_component(c);
    for (const auto& c : components) fold_component(c, components_);
    std::sort(components_.begin(), components_.end());
}

TypeSpec TypeSpec::parse(const std::string& text) {
    std::vector<SimpleType> parts;
    std::size_t i = 0;
    while (i < text.size()) {
        const char f = text[i];
        if (f < 'A' || f > 'G')
            throw ParseError("bad type string '" + text + "': expected family letter A-G at position " +
                             std::to_string(i));
        ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i)
            throw ParseError("bad type string '" + text + "': missing rank after '" + std::string(1, f) + "'");
        int rank = 0;
        try {
            rank = std::stoi(text.substr(start, i - start));
        } catch (const std::exception&) {
            throw ParseError("bad type string '" + text + "': rank out of range");
        }
        int repeat = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw ParseError("bad type string '" + text + "': missing exponent");
            repeat = std::stoi(text.substr(start, i - start));
            if (repeat < 1) throw ParseError("bad type string '" + text + "': zero exponent");
        }
        for (int k = 0; k < repeat; ++k) parts.push_back({Family(f), rank});
    }
    return TypeSpec(parts);
}

int TypeSpec::total_rank() const {
    int r = 0;
    for (const auto& c : components_) r += c.rank;
    return r;
}

std::string TypeSpec::str() const { return render_components(components_); }

TypeLabel::TypeLabel(const std::vector<SimpleType>& parts) {
    std::vector<SimpleType> folded;
    for (const auto& p : parts) fold_component(p, folded);
    for (const auto& p : folded) ++mult_[p];
}

std::vector<SimpleType> TypeLabel::parts() const {
    std::vector<SimpleType> out;
    for (const auto& [t, n] : mult_)
        for (int k = 0; k < n; ++k) out.push_back(t);
    return out;
}

std::string TypeLabel::str() const { return render_components(parts()); }

namespace {

// Gram matrix of the simple roots, normalized so short roots have squared
// length 2 in every component.  All entries are integers.
std::vector<Coord> component_gram(const SimpleType& t) {
    const int n = t.rank;
    std::vector<Coord> g(std::size_t(n) * n, 0);
    auto at = [&](int i, int j) -> Coord& { return g[std::size_t(i) * n + j]; };
    auto chain = [&](Coord diag, Coord off) {
        for (int i = 0; i < n; ++i) at(i, i) = diag;
        for (int i = 0; i + 1 < n; ++i) at(i, i + 1) = at(i + 1, i) = off;
    };
    switch (t.family) {
        case Family::A:
            chain(2, -1);
            break;
        case Family::B:
            chain(4, -2);
            at(n - 1, n - 1) = 2;
            break;
        case Family::C:
            chain(2, -1);
            at(n - 1, n - 1) = 4;
            at(n - 2, n - 1) = at(n - 1, n - 2) = -2;
            break;
        case Family::D:
            chain(2, -1);
            at(n - 2, n - 1) = at(n - 1, n - 2) = 0;
            at(n - 3, n - 1) = at(n - 1, n - 3) = -1;
            break;
        case Family::E: {
            chain(2, 0);
            // Bourbaki numbering: branch node is 4, node 2 hangs off it.
            auto edge = [&](int i, int j) { at(i - 1, j - 1) = at(j - 1, i - 1) = -1; };
            edge(1, 3); edge(3, 4); edge(4, 5);
            if (n >= 6) edge(5, 6);
            if (n >= 7) edge(6, 7);
            if (n >= 8) edge(7, 8);
            edge(2, 4);
            break;
        }
        case Family::F:
            // alpha1, alpha2 long; alpha3, alpha4 short
            g = {4, -2, 0, 0,
                 -2, 4, -2, 0,
                 0, -2, 2, -1,
                 0, 0, -1, 2};
            break;
        case Family::G:
            // alpha1 short, alpha2 long
            g = {2, -3,
                 -3, 6};
            break;
    }
    return g;
}

}  // namespace

std::size_t RootSystem::vec_hash(const RootVec& v) const {
    std::uint64_t h = 14695981039346656037ull;
    for (Coord c : v) {
        h ^= std::uint64_t(c) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return std::size_t(h);
}

RootSystem::RootSystem(const TypeSpec& spec) : spec_(spec), rank_(spec.total_rank()) {
    // Block-diagonal Gram matrix over the components.
    gram_.assign(std::size_t(rank_) * rank_, 0);
    int off = 0;
    for (const auto& comp : spec_.components()) {
        const auto g = component_gram(comp);
        for (int i = 0; i < comp.rank; ++i)
            for (int j = 0; j < comp.rank; ++j)
                gram_[std::size_t(off + i) * rank_ + (off + j)] = g[std::size_t(i) * comp.rank + j];
        off += comp.rank;
    }

    // Close the simple roots under the simple reflections.
    auto inner_raw = [&](const RootVec& a, const RootVec& b) {
        Coord s = 0;
        for (int i = 0; i < rank_; ++i) {
            if (a[std::size_t(i)] == 0) continue;
            for (int j = 0; j < rank_; ++j)
                s += a[std::size_t(i)] * gram_[std::size_t(i) * rank_ + j] * b[std::size_t(j)];
        }
        return s;
    };
    std::vector<RootVec> simples(std::size_t(rank_), RootVec(std::size_t(rank_), 0));
    for (int i = 0; i < rank_; ++i) simples[std::size_t(i)][std::size_t(i)] = 1;

    std::set<RootVec> seen(simples.begin(), simples.end());
    std::deque<RootVec> queue(simples.begin(), simples.end());
    while (!queue.empty()) {
        RootVec beta = queue.front();
        queue.pop_front();
        for (int j = 0; j < rank_; ++j) {
            const Coord bj = inner_raw(beta, simples[std::size_t(j)]);
            const Coord jj = gram_[std::size_t(j) * rank_ + j];
            const Coord n = 2 * bj / jj;
            RootVec image = beta;
            image[std::size_t(j)] -= n;
            if (seen.insert(image).second) queue.push_back(image);
        }
    }
    // Add negatives (reflection closure of the simples already contains them,
    // but be explicit for safety) and order deterministically: positives by
    // (height, coords), then negatives mirrored.
    std::vector<RootVec> pos;
    for (const auto& v : seen) {
        const bool nonneg = std::all_of(v.begin(), v.end(), [](Coord c) { return c >= 0; });
        if (nonneg) pos.push_back(v);
    }
    auto h = [](const RootVec& v) { return std::accumulate(v.begin(), v.end(), Coord(0)); };
    std::sort(pos.begin(), pos.end(), [&](const RootVec& a, const RootVec& b) {
        if (h(a) != h(b)) return h(a) < h(b);
        return a < b;
    });
    roots_ = pos;
    for (const auto& v : pos) {
        RootVec neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        roots_.push_back(neg);
    }

    const std::size_t m = roots_.size();
    index_.reserve(m * 2);
    for (std::size_t i = 0; i < m; ++i) index_.emplace(vec_hash(roots_[i]), int(i));

    negation_.resize(m);
    positive_.resize(m);
    norm2_.resize(m);
    const std::size_t npos = pos.size();
    for (std::size_t i = 0; i < m; ++i) {
        negation_[i] = int(i < npos ? i + npos : i - npos);
        positive_[i] = i < npos;
        norm2_[i] = inner_raw(roots_[i], roots_[i]);
    }

    for (int i = 0; i < rank_; ++i) {
        RootVec e(std::size_t(rank_), 0);
        e[std::size_t(i)] = 1;
        simple_.push_back(index_of(e));
    }

    pairing_.resize(m * m);
    for (std::size_t b = 0; b < m; ++b)
        for (std::size_t a = 0; a < m; ++a) {
            const Coord num = 2 * inner_raw(roots_[b], roots_[a]);
            pairing_[b * m + a] = std::int8_t(num / norm2_[a]);
        }

    gens_.reserve(std::size_t(rank_));
    for (int j = 0; j < rank_; ++j) {
        Permutation p(m);
        const int aj = simple_[std::size_t(j)];
        for (std::size_t b = 0; b < m; ++b) {
            RootVec image = roots_[b];
            image[std::size_t(j)] -= Coord(pairing(int(b), aj));
            p[b] = index_of(image);
        }
        gens_.push_back(std::move(p));
    }
}

int RootSystem::index_of(const RootVec& v) const {
    auto [lo, hi] = index_.equal_range(vec_hash(v));
    for (auto it = lo; it != hi; ++it)
        if (roots_[std::size_t(it->second)] == v) return it->second;
    return -1;
}

std::vector<int> RootSystem::positive_roots() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < roots_.size(); ++i)
        if (positive_[i]) out.push_back(int(i));
    return out;
}

Coord RootSystem::height(int i) const {
    const auto& v = roots_[std::size_t(i)];
    return std::accumulate(v.begin(), v.end(), Coord(0));
}

Coord RootSystem::inner(const RootVec& a, const RootVec& b) const {
    Coord s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a[std::size_t(i)] == 0) continue;
        for (int j = 0; j < rank_; ++j)
            s += a[std::size_t(i)] * gram_[std::size_t(i) * rank_ + j] * b[std::size_t(j)];
    }
    return s;
}

RootMask RootSystem::full_mask() const {
    RootMask m(roots_.size());
    for (std::size_t i = 0; i < roots_.size(); ++i) m.set(i);
    return m;
}

RootSystem build_root_system(const TypeSpec& spec) { return RootSystem(spec); }

int reflect(const RootSystem& rs, int alpha, int beta) {
    RootVec image = rs.root(beta);
    const auto& a = rs.root(alpha);
    const int n = rs.pairing(beta, alpha);
    for (std::size_t i = 0; i < image.size(); ++i) image[i] -= Coord(n) * a[i];
    const int idx = rs.index_of(image);
    if (idx < 0) throw InternalError("reflection left the root system");
    return idx;
}

namespace {

Int factorial(int n) {
    Int f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

Int component_weyl_order(const SimpleType& t) {
    switch (t.family) {
        case Family::A: return factorial(t.rank + 1);
        case Family::B:
        case Family::C: return (Int(1) << t.rank) * factorial(t.rank);
        case Family::D: return (Int(1) << (t.rank - 1)) * factorial(t.rank);
        case Family::E:
            if (t.rank == 6) return 51840;
            if (t.rank == 7) return 2903040;
            return 696729600;
        case Family::F: return 1152;
        case Family::G: return 12;
    }
    throw InternalError("unknown family");
}

}  // namespace

exact::Int weyl_order(const TypeSpec& spec) {
    Int w = 1;
    for (const auto& c : spec.components()) w *= component_weyl_order(c);
    return w;
}

exact::Int weyl_order(const TypeLabel& label) {
    Int w = 1;
    for (const auto& [t, n] : label.multiplicities())
        for (int k = 0; k < n; ++k) w *= component_weyl_order(t);
    return w;
}

std::vector<int> simple_system(const RootSystem& rs, const RootMask& psi) {
    // Positivity on psi comes from the functional with coefficients
    // (1, N, N^2, ...) in the fundamental-coweight pairing, i.e. evaluating
    // the coordinate vector base N, with N = 1 + max root height.  No root
    // evaluates to zero, so this is a valid generic choice for every psi.
    Coord max_h = 0;
    for (std::size_t i = 0; i < rs.num_roots(); ++i)
        max_h = std::max(max_h, rs.height(int(i)));
    const Int n_base = Int(max_h) + 1;
    auto f = [&](int i) {
        Int val = 0;
        Int p = 1;
        for (Coord c : rs.root(i)) {
            val += Int(c) * p;
            p *= n_base;
        }
        return val;
    };

    std::vector<int> positives;
    for (std::size_t i = 0; i < rs.num_roots(); ++i)
        if (psi.test(i) && f(int(i)) > 0) positives.push_back(int(i));

    std::vector<int> base;
    for (int p : positives) {
        bool decomposable = false;
        for (int q : positives) {
            if (decomposable) break;
            for (int r : positives) {
                const auto& vq = rs.root(q);
                const auto& vr = rs.root(r);
                const auto& vp = rs.root(p);
                bool sum = true;
                for (std::size_t i = 0; i < vp.size(); ++i)
                    if (vq[i] + vr[i] != vp[i]) { sum = false; break; }
                if (sum) { decomposable = true; break; }
            }
        }
        if (!decomposable) base.push_back(p);
    }
    return base;
}

namespace {

struct Component {
    std::vector<int> verts;  // positions into the base
};

std::vector<Component> split_components(const std::vector<std::vector<int>>& cartan) {
    const int n = int(cartan.size());
    std::vector<int> comp(std::size_t(n), -1);
    std::vector<Component> out;
    for (int s = 0; s < n; ++s) {
        if (comp[std::size_t(s)] >= 0) continue;
        Component c;
        std::deque<int> q{s};
        comp[std::size_t(s)] = int(out.size());
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            c.verts.push_back(v);
            for (int w = 0; w < n; ++w)
                if (w != v && cartan[std::size_t(v)][std::size_t(w)] != 0 && comp[std::size_t(w)] < 0) {
                    comp[std::size_t(w)] = int(out.size());
                    q.push_back(w);
                }
        }
        out.push_back(std::move(c));
    }
    return out;
}

// Classify one connected Cartan matrix.  Any closed symmetric subset of a
// root system is itself a root system, so failure to match is an internal error.
SimpleType classify_component(const std::vector<std::vector<int>>& cartan,
                              const std::vector<int>& verts) {
    const int r = int(verts.size());
    if (r == 1) return {Family::A, 1};

    auto n_of = [&](int i, int j) { return cartan[std::size_t(verts[std::size_t(i)])][std::size_t(verts[std::size_t(j)])]; };
    std::vector<int> degree(std::size_t(r), 0);
    int triple = 0;
    std::vector<std::pair<int, int>> doubles;  // (long end, short end)
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j || n_of(i, j) == 0) continue;
            if (j > i) {
                const int mult = n_of(i, j) * n_of(j, i);
                if (mult == 3) ++triple;
                if (mult == 2) {
                    // n(x, y) = -2 means y is the short one.
                    if (n_of(i, j) == -2) doubles.emplace_back(i, j);
                    else doubles.emplace_back(j, i);
                }
            }
            ++degree[std::size_t(i)];
        }

    if (triple > 0) {
        if (r != 2 || triple != 1) throw InternalError("unmatched Cartan matrix (G-like)");
        return {Family::G, 2};
    }

    const int maxdeg = *std::max_element(degree.begin(), degree.end());

    if (!doubles.empty()) {
        if (doubles.size() != 1 || maxdeg > 2)
            throw InternalError("unmatched Cartan matrix (multiple double bonds)");
        if (r == 2) return {Family::B, 2};
        const auto [lng, shrt] = doubles.front();
        const bool long_leaf = degree[std::size_t(lng)] == 1;
        const bool short_leaf = degree[std::size_t(shrt)] == 1;
        if (short_leaf && !long_leaf) return {Family::B, r};
        if (long_leaf && !short_leaf) return {Family::C, r};
        if (!long_leaf && !short_leaf && r == 4) return {Family::F, 4};
        throw InternalError("unmatched Cartan matrix (B/C/F-like)");
    }

    // Simply laced.
    if (maxdeg <= 2) return {Family::A, r};
    if (maxdeg > 3) throw InternalError("unmatched Cartan matrix (degree > 3)");
    int branch = -1;
    for (int i = 0; i < r; ++i)
        if (degree[std::size_t(i)] == 3) {
            if (branch >= 0) throw InternalError("unmatched Cartan matrix (two branch nodes)");
            branch = i;
        }
    // Arm lengths from the branch node.
    std::vector<int> arms;
    for (int i = 0; i < r; ++i) {
        if (i == branch || n_of(branch, i) == 0) continue;
        int len = 1;
        int prev = branch, cur = i;
        for (;;) {
            int next = -1;
            for (int k = 0; k < r; ++k)
                if (k != prev && k != cur && n_of(cur, k) != 0) { next = k; break; }
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3) throw InternalError("unmatched Cartan matrix (branch arms)");
    if (arms[0] == 1 && arms[1] == 1) return {Family::D, r};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        return {Family::E, r};
    throw InternalError("unmatched Cartan matrix (simply laced shape)");
}

}  // namespace

TypeLabel identify_type(const RootSystem& rs, const RootMask& psi) {
    const auto base = simple_system(rs, psi);
    const int r = int(base.size());
    std::vector<std::vector<int>> cartan(std::size_t(r), std::vector<int>(std::size_t(r), 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            cartan[std::size_t(i)][std::size_t(j)] = rs.pairing(base[std::size_t(i)], base[std::size_t(j)]);
    std::vector<SimpleType> parts;
    for (const auto& comp : split_components(cartan))
        parts.push_back(classify_component(cartan, comp.verts));
    return TypeLabel(parts);
}

}  // namespace strata
