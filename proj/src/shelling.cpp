#include "arrlab/shelling.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <map>
#include <numeric>

#include "arrlab/errors.hpp"

namespace arrlab {

namespace {

// Tie-break key: the per-coordinate face encoding.
const std::vector<int>& chamberKey(const Chamber& c, Family fam) {
    return fam == Family::TypeA ? c.faceA.blockOf : c.faceB.code;
}

int hyperplaneCountOf(const Ambient& h) {
    return h.family == Family::TypeA ? h.n * (h.n - 1) / 2 : h.n * h.n;
}

RegionPoset posetFromChambers(const Ambient& h, std::vector<Chamber> chambers, size_t baseIndex) {
    RegionPoset p;
    p.ambient = h;
    p.hyperplaneCount = hyperplaneCountOf(h);
    p.chambers = std::move(chambers);
    if (baseIndex >= p.chambers.size())
        throw IndexOutOfRange("posetOfRegions: base index out of range");
    p.base = baseIndex;

    const size_t m = p.chambers.size();
    p.ell.resize(m);
    for (size_t i = 0; i < m; ++i)
        p.ell[i] = std::popcount(p.chambers[i].signs ^ p.chambers[p.base].signs);

    // Chambers separated by a single hyperplane differ by exactly one in ell.
    std::vector<std::vector<size_t>> coversInto(m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            if (std::popcount(p.chambers[i].signs ^ p.chambers[j].signs) != 1) continue;
            size_t lo = p.ell[i] < p.ell[j] ? i : j;
            size_t hi = lo == i ? j : i;
            p.covers.emplace_back(lo, hi);
            coversInto[hi].push_back(lo);
        }

    p.leqMatrix.assign(m, std::vector<char>(m, 0));
    for (size_t i = 0; i < m; ++i) p.leqMatrix[i][i] = 1;
    std::vector<size_t> byEll(m);
    std::iota(byEll.begin(), byEll.end(), size_t{0});
    std::stable_sort(byEll.begin(), byEll.end(),
                     [&](size_t x, size_t y) { return p.ell[x] < p.ell[y]; });
    for (size_t j : byEll)
        for (size_t u : coversInto[j])
            for (size_t i = 0; i < m; ++i)
                if (p.leqMatrix[i][u]) p.leqMatrix[i][j] = 1;
    return p;
}

}  // namespace

std::vector<Chamber> chambersOf(const Ambient& h) {
    std::vector<Chamber> out;
    if (h.family == Family::TypeA) {
        const int n = h.n;
        if (n < 1) throw ValidationError("chambersOf: type A ambient needs n >= 1");
        if (n > 10) throw EnumerationBudget("chambersOf: type A supports n <= 10");
        const auto hps = canonicalHyperplanesA(n);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            // perm[t] is the coordinate taking the (t+1)-th smallest value.
            std::vector<int> pos(n + 1, 0);
            for (int t = 0; t < n; ++t) pos[perm[t]] = t;
            Chamber c;
            c.faceA.k = n;
            c.faceA.blockOf.assign(n, 0);
            for (int coord = 1; coord <= n; ++coord) c.faceA.blockOf[coord - 1] = pos[coord];
            for (size_t b = 0; b < hps.size(); ++b)
                if (pos[hps[b].j] > pos[hps[b].i]) c.signs |= uint64_t(1) << b;
            out.push_back(std::move(c));
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        const int n = h.n;
        if (n < 0) throw ValidationError("chambersOf: type B ambient needs n >= 0");
        if (n > 8) throw EnumerationBudget("chambersOf: type B supports n <= 8");
        const auto hps = canonicalHyperplanesB(n);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            for (uint32_t neg = 0; neg < (1u << n); ++neg) {
                // Sample point x_{perm[t]} = s_t * (t+1), s_t = -1 iff bit t of neg.
                std::vector<long long> x(n + 1, 0);
                Chamber c;
                c.faceB.k = n;
                c.faceB.code.assign(n, 0);
                for (int t = 0; t < n; ++t) {
                    int sgn = (neg >> t) & 1 ? -1 : 1;
                    x[perm[t]] = sgn * (t + 1);
                    c.faceB.code[perm[t] - 1] = sgn > 0 ? 2 * (t + 1) - 1 : 2 * (t + 1);
                }
                for (size_t b = 0; b < hps.size(); ++b) {
                    long long v = hps[b].j == 0
                                      ? x[hps[b].i]
                                      : static_cast<long long>(hps[b].tau) * x[hps[b].j] - x[hps[b].i];
                    if (v > 0) c.signs |= uint64_t(1) << b;
                }
                out.push_back(std::move(c));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

uint64_t separationSet(const Chamber& c1, const Chamber& c2) { return c1.signs ^ c2.signs; }

RegionPoset posetOfRegionsAt(const Ambient& h, size_t baseIndex) {
    return posetFromChambers(h, chambersOf(h), baseIndex);
}

RegionPoset posetOfRegions(const Ambient& h, const Chamber& base) {
    auto chambers = chambersOf(h);
    for (size_t i = 0; i < chambers.size(); ++i)
        if (chambers[i].signs == base.signs)
            return posetFromChambers(h, std::move(chambers), i);
    throw ValidationError("posetOfRegions: base chamber not recognized");
}

std::vector<size_t> linearExtension(const RegionPoset& p,
                                    const std::optional<std::set<size_t>>& preferredFilter) {
    const size_t m = p.chambers.size();
    std::vector<char> inF(m, 0);
    if (preferredFilter) {
        for (size_t i : *preferredFilter) {
            if (i >= m) throw IndexOutOfRange("linearExtension: filter index out of range");
            inF[i] = 1;
        }
        for (size_t i = 0; i < m; ++i) {
            if (!inF[i]) continue;
            for (size_t j = 0; j < m; ++j)
                if (!inF[j] && p.leq(i, j))
                    throw NotAnOrderFilter("linearExtension: preferred set is not upward closed");
        }
    }
    std::vector<size_t> idx(m);
    std::iota(idx.begin(), idx.end(), size_t{0});
    const Family fam = p.ambient.family;
    std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) {
        if (inF[x] != inF[y]) return inF[x] < inF[y];
        if (p.ell[x] != p.ell[y]) return p.ell[x] < p.ell[y];
        return chamberKey(p.chambers[x], fam) < chamberKey(p.chambers[y], fam);
    });
    return idx;
}

ShellingCheck checkShellingOrder(const AbstractComplex& c, const ShellingOrder& order) {
    constexpr int kMaxVertices = 256;
    if (c.vertexCount > kMaxVertices)
        throw EnumerationBudget("checkShellingOrder: complex exceeds 256 vertices");
    for (const auto& f : c.facets)
        if (f.size() != c.facets.front().size())
            throw NotPure("checkShellingOrder: complex facets have mixed dimensions");
    for (const auto& f : order.facets)
        for (int v : f)
            if (v < 0 || v >= c.vertexCount)
                throw IndexOutOfRange("checkShellingOrder: vertex index out of range");

    auto normalize = [](std::vector<std::vector<int>> fs) {
        for (auto& f : fs) std::sort(f.begin(), f.end());
        std::sort(fs.begin(), fs.end());
        return fs;
    };
    if (normalize(c.facets) != normalize(order.facets))
        throw NotAPermutation("checkShellingOrder: order is not a permutation of the facets");

    const size_t t = order.facets.size();
    if (t == 0) return {true, std::nullopt};
    const size_t d = order.facets.front().size();
    if (d <= 1) return {true, std::nullopt};  // 0-dimensional: every order shells

    using Mask = std::bitset<kMaxVertices>;
    std::vector<Mask> masks(t);
    for (size_t i = 0; i < t; ++i)
        for (int v : order.facets[i]) masks[i].set(static_cast<size_t>(v));

    for (size_t j = 1; j < t; ++j) {
        // Ridges of F_j shared with earlier facets; the old part of F_j's
        // boundary must be their (nonempty) union.
        std::vector<Mask> ridges;
        for (size_t k = 0; k < j; ++k) {
            Mask inter = masks[k] & masks[j];
            if (inter.count() != d - 1) continue;
            if (std::find(ridges.begin(), ridges.end(), inter) == ridges.end())
                ridges.push_back(inter);
        }
        bool ok = !ridges.empty();
        for (size_t k = 0; ok && k < j; ++k) {
            Mask inter = masks[k] & masks[j];
            if (inter.none()) continue;
            bool covered = false;
            for (const auto& r : ridges)
                if ((inter & ~r).none()) {
                    covered = true;
                    break;
                }
            ok = covered;
        }
        if (!ok) return {false, j + 1};
    }
    return {true, std::nullopt};
}

bool isShellingOrder(const AbstractComplex& c, const ShellingOrder& order) {
    return checkShellingOrder(c, order).isShelling;
}

ShellingOrder shellCoxeter(const Ambient& h) {
    LinkComplex lc = coxeterAbstract(h);
    RegionPoset p = posetOfRegionsAt(h, 0);
    auto ord = linearExtension(p);
    ShellingOrder out;
    out.facets.reserve(ord.size());
    for (size_t i : ord) {
        const Chamber& c = p.chambers[i];
        out.facets.push_back(h.family == Family::TypeA ? lc.vertexIndices(c.faceA)
                                                       : lc.vertexIndices(c.faceB));
    }
    return out;
}

ComplementClasses complementClasses(const Arrangement& a, size_t index) {
    if (index >= a.size()) throw IndexOutOfRange("complementClasses: member index out of range");
    const Ambient& amb = a.ambient();
    if (amb.family == Family::TypeA) {
        for (const auto& s : a.subspacesA())
            if (!isHyperplane(amb, s))
                throw NotHyperplanes("complementClasses: every member must be a hyperplane");
    } else {
        for (const auto& s : a.subspacesB())
            if (!isHyperplane(amb, s))
                throw NotHyperplanes("complementClasses: every member must be a hyperplane");
    }

    ComplementClasses out;
    out.restr = restriction(a, index);
    const Ambient ramb = out.restr.arrangement.ambient();
    out.chambers = chambersOf(ramb);

    // Traces of the other members are hyperplanes of the restricted ambient.
    std::vector<int> traceBits;
    if (ramb.family == Family::TypeA)
        for (const auto& s : out.restr.arrangement.subspacesA())
            traceBits.push_back(hyperplaneIndex(ramb, s));
    else
        for (const auto& s : out.restr.arrangement.subspacesB())
            traceBits.push_back(hyperplaneIndex(ramb, s));

    std::map<uint64_t, size_t> classOf;  // trace signature -> class, first-seen order
    for (size_t i = 0; i < out.chambers.size(); ++i) {
        uint64_t sig = 0;
        for (size_t b = 0; b < traceBits.size(); ++b)
            if ((out.chambers[i].signs >> traceBits[b]) & 1) sig |= uint64_t(1) << b;
        auto [it, fresh] = classOf.emplace(sig, out.classes.size());
        if (fresh) out.classes.emplace_back();
        out.classes[it->second].push_back(i);
    }
    return out;
}

namespace {

struct LinkTraitsA {
    using Face = FaceA;
    static const std::vector<SubspaceA>& members(const Arrangement& a) { return a.subspacesA(); }
    static const Face& face(const Chamber& c) { return c.faceA; }
    // Pull a face of the restricted ambient back to the big ambient: each
    // restricted coordinate stands for one host block.
    static Face expand(const Face& f, const Restriction& r) {
        const SubspaceA& host = r.hostA;
        std::vector<int> label(host.n() + 1, 0);
        for (size_t j = 0; j < host.blocks().size(); ++j)
            for (int c : host.blocks()[j]) label[c] = static_cast<int>(j);
        Face out;
        out.k = f.k;
        out.blockOf.assign(host.n(), 0);
        for (int c = 1; c <= host.n(); ++c) out.blockOf[c - 1] = f.blockOf[label[c]];
        return out;
    }
};

struct LinkTraitsB {
    using Face = FaceB;
    static const std::vector<SubspaceB>& members(const Arrangement& a) { return a.subspacesB(); }
    static const Face& face(const Chamber& c) { return c.faceB; }
    static Face expand(const Face& f, const Restriction& r) {
        const SubspaceB& host = r.hostB;
        Face out;
        out.k = f.k;
        out.code.assign(host.n(), 0);  // host zero set stays zero
        for (int j = 0; j < host.dim(); ++j) {
            const int code = f.code[j];
            const auto& [mem, sg] = host.signedBlocks()[j];
            for (size_t u = 0; u < mem.size(); ++u) {
                if (code == 0) continue;
                const int level = (code + 1) / 2;
                const int rel = code % 2 == 1 ? 1 : -1;  // sign relative to block representative
                out.code[mem[u] - 1] = rel * sg[u] > 0 ? 2 * level - 1 : 2 * level;
            }
        }
        return out;
    }
};

template <class Traits>
std::vector<typename Traits::Face> shellLinkFaces(const Arrangement& a) {
    const auto& mem = Traits::members(a);
    std::vector<typename Traits::Face> out;

    if (a.size() == 1) {
        Restriction r = restriction(a, 0);
        RegionPoset p = posetOfRegionsAt(r.arrangement.ambient(), 0);
        for (size_t i : linearExtension(p))
            out.push_back(Traits::expand(Traits::face(p.chambers[i]), r));
        return out;
    }

    size_t last = 0;
    for (size_t i = 1; i < mem.size(); ++i)
        if (mem[last] < mem[i]) last = i;
    out = shellLinkFaces<Traits>(a.deletion(last));

    ComplementClasses cc = complementClasses(a, last);
    const Ambient ramb = cc.restr.arrangement.ambient();
    const int hcount = hyperplaneCountOf(ramb);
    const uint64_t fullMask =
        hcount >= 64 ? ~uint64_t(0) : (uint64_t(1) << hcount) - 1;

    for (const auto& klass : cc.classes) {
        // Re-base at the antipode of the class's least chamber: the class
        // disagrees with that base on every trace, so it is an order filter.
        const uint64_t target = cc.chambers[klass.front()].signs ^ fullMask;
        size_t baseIdx = cc.chambers.size();
        for (size_t i = 0; i < cc.chambers.size(); ++i)
            if (cc.chambers[i].signs == target) {
                baseIdx = i;
                break;
            }
        if (baseIdx == cc.chambers.size()) throw Error("shellLink: antipodal chamber missing");
        RegionPoset p = posetFromChambers(ramb, cc.chambers, baseIdx);
        std::set<size_t> filter(klass.begin(), klass.end());
        for (size_t i : linearExtension(p, filter))
            if (filter.count(i)) out.push_back(Traits::expand(Traits::face(p.chambers[i]), cc.restr));
    }
    return out;
}

}  // namespace

ShellingOrder shellLink(const Arrangement& a) {
    if (a.empty()) throw ValidationError("shellLink: the empty arrangement has a void link");
    const Ambient& amb = a.ambient();
    if (amb.family == Family::TypeA) {
        for (const auto& s : a.subspacesA())
            if (!isHyperplane(amb, s)) throw NotHyperplanes("shellLink: members must be hyperplanes");
    } else {
        for (const auto& s : a.subspacesB())
            if (!isHyperplane(amb, s)) throw NotHyperplanes("shellLink: members must be hyperplanes");
    }
    if (a.maxDim() < 1)
        throw ValidationError("shellLink: the link of an origin arrangement has no facets to order");

    LinkComplex lc = linkAbstract(a);
    ShellingOrder out;
    if (amb.family == Family::TypeA)
        for (const auto& f : shellLinkFaces<LinkTraitsA>(a)) out.facets.push_back(lc.vertexIndices(f));
    else
        for (const auto& f : shellLinkFaces<LinkTraitsB>(a)) out.facets.push_back(lc.vertexIndices(f));
    return out;
}

}  // namespace arrlab
