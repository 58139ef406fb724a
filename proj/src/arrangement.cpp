#include "arrlab/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace arrlab {

namespace {

// Union-find over 0-based coordinates with sign parity relative to the root
// and a zero flag per class. A parity conflict (x = -x) zeroes the class.
struct ParityUF {
    std::vector<int> parent;
    std::vector<uint8_t> rel;
    std::vector<uint8_t> zeroed;

    explicit ParityUF(int n) : parent(n), rel(n, 0), zeroed(n, 0) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }

    int find(int x) {
        if (parent[x] == x) return x;
        int p = parent[x];
        int root = find(p);
        rel[x] = rel[x] ^ rel[p];
        parent[x] = root;
        return root;
    }

    // Constraint x_a = (-1)^parity x_b.
    void unite(int a, int b, uint8_t parity) {
        int ra = find(a), rb = find(b);
        uint8_t pa = rel[a], pb = rel[b];
        if (ra == rb) {
            if ((pa ^ pb) != parity) zeroed[ra] = 1;
            return;
        }
        parent[rb] = ra;
        rel[rb] = static_cast<uint8_t>(pa ^ pb ^ parity);
        zeroed[ra] = static_cast<uint8_t>(zeroed[ra] | zeroed[rb]);
    }

    void markZero(int x) { zeroed[find(x)] = 1; }
};

void checkCoordinate(int n, int c, const char* what) {
    if (c < 1 || c > n)
        throw ValidationError(std::string(what) + ": coordinate " + std::to_string(c) +
                              " outside 1.." + std::to_string(n));
}

SubspaceA extractA(int n, ParityUF& uf) {
    std::map<int, std::vector<int>> classes;
    for (int i = 0; i < n; ++i) classes[uf.find(i)].push_back(i + 1);
    std::vector<std::vector<int>> blocks;
    blocks.reserve(classes.size());
    for (auto& [root, members] : classes) blocks.push_back(std::move(members));
    std::sort(blocks.begin(), blocks.end());
    return SubspaceA::fromBlocks(n, blocks);
}

SubspaceB extractB(int n, ParityUF& uf) {
    std::map<int, std::vector<int>> classes;
    for (int i = 0; i < n; ++i) classes[uf.find(i)].push_back(i);
    std::vector<int> zero;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> blocks;
    for (auto& [root, members] : classes) {
        if (uf.zeroed[root]) {
            for (int m : members) zero.push_back(m + 1);
            continue;
        }
        uint8_t minRel = uf.rel[members[0]];
        std::vector<int> mem, signs;
        mem.reserve(members.size());
        signs.reserve(members.size());
        for (int m : members) {
            mem.push_back(m + 1);
            signs.push_back((uf.rel[m] ^ minRel) ? -1 : 1);
        }
        blocks.emplace_back(std::move(mem), std::move(signs));
    }
    // Route through fromParts to keep a single canonicalizing constructor.
    return SubspaceB::fromParts(n, zero, blocks);
}

void applyConstraints(ParityUF& uf, const SubspaceA& s) {
    for (const auto& b : s.blocks())
        for (size_t k = 1; k < b.size(); ++k) uf.unite(b[k] - 1, b[0] - 1, 0);
}

void applyConstraints(ParityUF& uf, const SubspaceB& s) {
    for (int z : s.zeroSet()) uf.markZero(z - 1);
    for (const auto& [mem, signs] : s.signedBlocks())
        for (size_t k = 1; k < mem.size(); ++k)
            uf.unite(mem[k] - 1, mem[0] - 1, signs[k] == signs[0] ? 0 : 1);
}

}  // namespace

SubspaceA SubspaceA::fromBlocks(int n, const std::vector<std::vector<int>>& merges) {
    if (n < 1) throw ValidationError("SubspaceA: n must be >= 1");
    ParityUF uf(n);
    for (const auto& g : merges) {
        for (int c : g) checkCoordinate(n, c, "SubspaceA");
        for (size_t k = 1; k < g.size(); ++k) uf.unite(g[k] - 1, g[0] - 1, 0);
    }
    std::map<int, std::vector<int>> classes;
    for (int i = 0; i < n; ++i) classes[uf.find(i)].push_back(i + 1);
    SubspaceA out;
    out.n_ = n;
    for (auto& [root, members] : classes) out.blocks_.push_back(std::move(members));
    std::sort(out.blocks_.begin(), out.blocks_.end());
    return out;
}

SubspaceB SubspaceB::fromParts(
    int n, const std::vector<int>& zero,
    const std::vector<std::pair<std::vector<int>, std::vector<int>>>& signedMerges) {
    // n = 0 is the trivial ambient; it arises as the restriction to an
    // origin subspace and carries no coordinates.
    if (n < 0) throw ValidationError("SubspaceB: n must be >= 0");
    ParityUF uf(n);
    for (int z : zero) {
        checkCoordinate(n, z, "SubspaceB zero set");
        uf.markZero(z - 1);
    }
    for (const auto& [mem, signs] : signedMerges) {
        if (mem.size() != signs.size())
            throw ValidationError("SubspaceB: sign list length differs from member list");
        for (size_t k = 0; k < mem.size(); ++k) {
            checkCoordinate(n, mem[k], "SubspaceB block");
            if (signs[k] != 1 && signs[k] != -1)
                throw ValidationError("SubspaceB: signs must be +1 or -1");
        }
        for (size_t k = 1; k < mem.size(); ++k)
            uf.unite(mem[k] - 1, mem[0] - 1, signs[k] == signs[0] ? 0 : 1);
    }

    std::map<int, std::vector<int>> classes;
    for (int i = 0; i < n; ++i) classes[uf.find(i)].push_back(i);
    SubspaceB out;
    out.n_ = n;
    for (auto& [root, members] : classes) {
        if (uf.zeroed[root]) {
            for (int m : members) out.zero_.push_back(m + 1);
            continue;
        }
        uint8_t minRel = uf.rel[members[0]];
        std::vector<int> mem, sg;
        for (int m : members) {
            mem.push_back(m + 1);
            sg.push_back((uf.rel[m] ^ minRel) ? -1 : 1);
        }
        out.blocks_.emplace_back(std::move(mem), std::move(sg));
    }
    std::sort(out.zero_.begin(), out.zero_.end());
    std::sort(out.blocks_.begin(), out.blocks_.end());
    return out;
}

SubspaceA intersectA(const SubspaceA& s, const SubspaceA& t) {
    if (s.n() != t.n()) throw AmbientMismatch("intersectA: different ambient sizes");
    ParityUF uf(s.n());
    applyConstraints(uf, s);
    applyConstraints(uf, t);
    return extractA(s.n(), uf);
}

SubspaceB intersectB(const SubspaceB& s, const SubspaceB& t) {
    if (s.n() != t.n()) throw AmbientMismatch("intersectB: different ambient sizes");
    ParityUF uf(s.n());
    applyConstraints(uf, s);
    applyConstraints(uf, t);
    return extractB(s.n(), uf);
}

bool subspaceLeq(const SubspaceA& s, const SubspaceA& t) { return intersectA(s, t) == t; }
bool subspaceLeq(const SubspaceB& s, const SubspaceB& t) { return intersectB(s, t) == t; }

namespace {

template <class S, class InterF>
void checkArrangement(int n, const std::vector<S>& subs, InterF inter, const char* family) {
    for (size_t i = 0; i < subs.size(); ++i) {
        if (subs[i].n() != n)
            throw AmbientMismatch(std::string(family) + ": subspace " + std::to_string(i) +
                                  " lives in a different ambient");
        if (subs[i].isFullSpace())
            throw ValidationError(std::string(family) + ": subspace " + std::to_string(i) +
                                  " equals the ambient space");
    }
    for (size_t i = 0; i < subs.size(); ++i)
        for (size_t j = i + 1; j < subs.size(); ++j) {
            S x = inter(subs[i], subs[j]);
            if (x == subs[i] || x == subs[j])
                throw ValidationError(std::string(family) + ": subspaces " + std::to_string(i) +
                                      " and " + std::to_string(j) + " are nested (not an antichain)");
        }
}

}  // namespace

Arrangement Arrangement::typeA(int n, std::vector<SubspaceA> subs) {
    checkArrangement(n, subs, [](const SubspaceA& a, const SubspaceA& b) { return intersectA(a, b); },
                     "Arrangement(TypeA)");
    Arrangement a;
    a.ambient_ = Ambient{Family::TypeA, n};
    a.subA_ = std::move(subs);
    return a;
}

Arrangement Arrangement::typeB(int n, std::vector<SubspaceB> subs) {
    checkArrangement(n, subs, [](const SubspaceB& a, const SubspaceB& b) { return intersectB(a, b); },
                     "Arrangement(TypeB)");
    Arrangement a;
    a.ambient_ = Ambient{Family::TypeB, n};
    a.subB_ = std::move(subs);
    return a;
}

size_t Arrangement::size() const {
    return ambient_.family == Family::TypeA ? subA_.size() : subB_.size();
}

int Arrangement::maxDim() const {
    int d = -1;
    if (ambient_.family == Family::TypeA)
        for (const auto& s : subA_) d = std::max(d, s.dim());
    else
        for (const auto& s : subB_) d = std::max(d, s.dim());
    return d;
}

Arrangement Arrangement::deletion(size_t index) const {
    if (index >= size()) throw IndexOutOfRange("deletion: index " + std::to_string(index));
    Arrangement out = *this;
    if (ambient_.family == Family::TypeA)
        out.subA_.erase(out.subA_.begin() + static_cast<long>(index));
    else
        out.subB_.erase(out.subB_.begin() + static_cast<long>(index));
    return out;
}

bool Arrangement::operator==(const Arrangement& o) const {
    if (!(ambient_ == o.ambient_)) return false;
    auto a1 = subA_;
    auto a2 = o.subA_;
    std::sort(a1.begin(), a1.end());
    std::sort(a2.begin(), a2.end());
    auto b1 = subB_;
    auto b2 = o.subB_;
    std::sort(b1.begin(), b1.end());
    std::sort(b2.begin(), b2.end());
    return a1 == a2 && b1 == b2;
}

namespace {

// Closure of {ambient} u atoms under intersection with atoms, then lattice
// order, Moebius values and the containment matrix. Elements sorted by
// descending dimension, ties by canonical form; index 0 is the ambient.
template <class S, class InterF, class DimF>
void latticeCore(std::vector<S>& elems, const std::vector<S>& atoms, InterF inter, DimF dimOf,
                 IntersectionLattice& lat) {
    std::set<S> seen(elems.begin(), elems.end());
    std::vector<S> queue(elems.begin(), elems.end());
    while (!queue.empty()) {
        S e = queue.back();
        queue.pop_back();
        for (const auto& a : atoms) {
            S x = inter(e, a);
            if (seen.insert(x).second) queue.push_back(x);
        }
    }
    elems.assign(seen.begin(), seen.end());
    std::sort(elems.begin(), elems.end(), [&](const S& x, const S& y) {
        int dx = dimOf(x), dy = dimOf(y);
        if (dx != dy) return dx > dy;
        return x < y;
    });

    const size_t m = elems.size();
    lat.dims.resize(m);
    for (size_t i = 0; i < m; ++i) lat.dims[i] = dimOf(elems[i]);
    lat.leqMatrix.assign(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            lat.leqMatrix[i][j] = (inter(elems[i], elems[j]) == elems[j]);
    lat.mobius.assign(m, Int(0));
    if (m > 0) lat.mobius[0] = 1;
    // mu(0,Y) = -sum_{Z<Y} mu(0,Z); strict containment lowers dimension, so
    // the sorted order is a linear extension and a single sweep suffices.
    for (size_t j = 1; j < m; ++j) {
        Int s = 0;
        for (size_t i = 0; i < j; ++i)
            if (lat.leqMatrix[i][j]) s += lat.mobius[i];
        lat.mobius[j] = -s;
    }
}

}  // namespace

IntersectionLattice buildLattice(const Arrangement& a) {
    IntersectionLattice lat;
    lat.ambient = a.ambient();
    if (a.ambient().family == Family::TypeA) {
        std::vector<SubspaceA> elems{SubspaceA::fromBlocks(a.ambient().n, {})};
        for (const auto& s : a.subspacesA()) elems.push_back(s);
        latticeCore(
            elems, a.subspacesA(),
            [](const SubspaceA& x, const SubspaceA& y) { return intersectA(x, y); },
            [](const SubspaceA& x) { return x.dim(); }, lat);
        lat.elementsA = std::move(elems);
    } else {
        std::vector<SubspaceB> elems{SubspaceB::fromParts(a.ambient().n, {}, {})};
        for (const auto& s : a.subspacesB()) elems.push_back(s);
        latticeCore(
            elems, a.subspacesB(),
            [](const SubspaceB& x, const SubspaceB& y) { return intersectB(x, y); },
            [](const SubspaceB& x) { return x.dim(); }, lat);
        lat.elementsB = std::move(elems);
    }
    return lat;
}

IntPolynomial charPoly(const Arrangement& a) {
    IntersectionLattice lat = buildLattice(a);
    IntPolynomial chi;
    for (size_t j = 0; j < lat.size(); ++j)
        chi = chi + IntPolynomial::monomial(lat.dims[j], lat.mobius[j]);
    return chi;
}

IntPolynomial tailPoly(const Arrangement& a) {
    return IntPolynomial::monomial(a.ambient().essentialDim()) - charPoly(a);
}

SubspaceA contractIntoHost(const SubspaceA& t, const SubspaceA& host) {
    if (t.n() != host.n()) throw AmbientMismatch("contractIntoHost: different ambient sizes");
    // blockLabel[c] = 1-based index of the host block containing coordinate c.
    std::vector<int> blockLabel(host.n() + 1, 0);
    for (size_t j = 0; j < host.blocks().size(); ++j)
        for (int c : host.blocks()[j]) blockLabel[c] = static_cast<int>(j) + 1;

    std::vector<std::vector<int>> merges;
    for (const auto& tb : t.blocks()) {
        std::vector<int> labels;
        for (int c : tb) labels.push_back(blockLabel[c]);
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        // t must be a coarsening of host: host blocks may not be split.
        size_t total = 0;
        for (int l : labels) total += host.blocks()[l - 1].size();
        if (total != tb.size())
            throw ValidationError("contractIntoHost: subspace does not contain the host");
        merges.push_back(std::move(labels));
    }
    return SubspaceA::fromBlocks(host.blockCount(), merges);
}

SubspaceB contractIntoHost(const SubspaceB& t, const SubspaceB& host) {
    if (t.n() != host.n()) throw AmbientMismatch("contractIntoHost: different ambient sizes");
    const int k = host.dim();
    // Host zero coordinates must stay zero in t.
    std::set<int> tZero(t.zeroSet().begin(), t.zeroSet().end());
    for (int z : host.zeroSet())
        if (!tZero.count(z))
            throw ValidationError("contractIntoHost: subspace does not contain the host");

    // blockLabel/sign of each non-zero host coordinate.
    std::vector<int> blockLabel(host.n() + 1, 0);
    std::vector<int> hostSign(host.n() + 1, 0);
    for (int j = 0; j < k; ++j) {
        const auto& [mem, sg] = host.signedBlocks()[j];
        for (size_t u = 0; u < mem.size(); ++u) {
            blockLabel[mem[u]] = j + 1;
            hostSign[mem[u]] = sg[u];
        }
    }

    // Host blocks fully inside t's zero set become zero labels.
    std::vector<int> zeroLabels;
    std::vector<uint8_t> labelZero(k + 1, 0);
    for (int j = 0; j < k; ++j) {
        const auto& mem = host.signedBlocks()[j].first;
        size_t cnt = 0;
        for (int c : mem) cnt += tZero.count(c);
        if (cnt == mem.size()) {
            zeroLabels.push_back(j + 1);
            labelZero[j + 1] = 1;
        } else if (cnt != 0) {
            throw ValidationError("contractIntoHost: subspace does not contain the host");
        }
    }

    std::vector<std::pair<std::vector<int>, std::vector<int>>> merges;
    for (const auto& [mem, sg] : t.signedBlocks()) {
        std::map<int, int> labelSign;  // label -> relative sign in restricted coordinates
        for (size_t u = 0; u < mem.size(); ++u) {
            int lbl = blockLabel[mem[u]];
            if (lbl == 0 || labelZero[lbl])
                throw ValidationError("contractIntoHost: subspace does not contain the host");
            int eps = sg[u] * hostSign[mem[u]];
            auto [it, fresh] = labelSign.emplace(lbl, eps);
            if (!fresh && it->second != eps)
                throw ValidationError("contractIntoHost: subspace does not contain the host");
        }
        std::vector<int> labels, signs;
        for (const auto& [lbl, eps] : labelSign) {
            labels.push_back(lbl);
            signs.push_back(eps);
        }
        merges.emplace_back(std::move(labels), std::move(signs));
    }
    return SubspaceB::fromParts(k, zeroLabels, merges);
}

namespace {

template <class S, class InterF, class ContractF, class BuildF>
Restriction restrictImpl(const S& host, const std::vector<S>& members, InterF inter,
                         ContractF contract, BuildF build) {
    std::set<S> contractions;
    for (const auto& m : members) {
        if (m == host) continue;
        S t = inter(host, m);
        if (t == host) continue;  // member contains the host; no proper trace
        contractions.insert(contract(t, host));
    }
    // Keep inclusion-maximal traces: drop anything strictly contained in another.
    std::vector<S> kept;
    for (const auto& c : contractions) {
        bool dominated = false;
        for (const auto& d : contractions) {
            if (c == d) continue;
            if (inter(c, d) == c) {  // c is a subspace of d
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(c);
    }
    return build(std::move(kept));
}

}  // namespace

Restriction restrictionTo(const Arrangement& a, const SubspaceA& host) {
    if (a.ambient().family != Family::TypeA)
        throw AmbientMismatch("restrictionTo: type A host for a type B arrangement");
    if (host.n() != a.ambient().n) throw AmbientMismatch("restrictionTo: ambient size mismatch");
    bool member = std::find(a.subspacesA().begin(), a.subspacesA().end(), host) !=
                  a.subspacesA().end();
    if (!member) {
        IntersectionLattice lat = buildLattice(a);
        if (std::find(lat.elementsA.begin(), lat.elementsA.end(), host) == lat.elementsA.end())
            throw NotInLattice("restrictionTo: host is not an intersection of members");
    }
    return restrictImpl(
        host, a.subspacesA(),
        [](const SubspaceA& x, const SubspaceA& y) { return intersectA(x, y); },
        [](const SubspaceA& t, const SubspaceA& h) { return contractIntoHost(t, h); },
        [&](std::vector<SubspaceA> kept) {
            Restriction r;
            r.arrangement = Arrangement::typeA(host.blockCount(), std::move(kept));
            r.hostA = host;
            return r;
        });
}

Restriction restrictionTo(const Arrangement& a, const SubspaceB& host) {
    if (a.ambient().family != Family::TypeB)
        throw AmbientMismatch("restrictionTo: type B host for a type A arrangement");
    if (host.n() != a.ambient().n) throw AmbientMismatch("restrictionTo: ambient size mismatch");
    bool member = std::find(a.subspacesB().begin(), a.subspacesB().end(), host) !=
                  a.subspacesB().end();
    if (!member) {
        IntersectionLattice lat = buildLattice(a);
        if (std::find(lat.elementsB.begin(), lat.elementsB.end(), host) == lat.elementsB.end())
            throw NotInLattice("restrictionTo: host is not an intersection of members");
    }
    return restrictImpl(
        host, a.subspacesB(),
        [](const SubspaceB& x, const SubspaceB& y) { return intersectB(x, y); },
        [](const SubspaceB& t, const SubspaceB& h) { return contractIntoHost(t, h); },
        [&](std::vector<SubspaceB> kept) {
            Restriction r;
            r.arrangement = Arrangement::typeB(host.dim(), std::move(kept));
            r.hostB = host;
            return r;
        });
}

Restriction restriction(const Arrangement& a, size_t index) {
    if (index >= a.size()) throw IndexOutOfRange("restriction: index " + std::to_string(index));
    if (a.ambient().family == Family::TypeA) return restrictionTo(a, a.subspacesA()[index]);
    return restrictionTo(a, a.subspacesB()[index]);
}

std::vector<HyperplaneA> canonicalHyperplanesA(int n) {
    std::vector<HyperplaneA> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
    return out;
}

std::vector<HyperplaneB> canonicalHyperplanesB(int n) {
    std::vector<HyperplaneB> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            out.push_back({i, j, 1});
            out.push_back({i, j, -1});
        }
    for (int i = 1; i <= n; ++i) out.push_back({i, 0, 0});
    return out;
}

bool isHyperplane(const Ambient& ambient, const SubspaceA& s) {
    return s.n() == ambient.n && s.blockCount() == ambient.n - 1;
}

bool isHyperplane(const Ambient& ambient, const SubspaceB& s) {
    if (s.n() != ambient.n || s.dim() != ambient.n - 1) return false;
    return true;
}

int hyperplaneIndex(const Ambient& ambient, const SubspaceA& s) {
    if (ambient.family != Family::TypeA || !isHyperplane(ambient, s))
        throw NotHyperplanes("hyperplaneIndex: not a type A hyperplane");
    for (const auto& b : s.blocks())
        if (b.size() == 2) {
            auto hs = canonicalHyperplanesA(ambient.n);
            for (size_t k = 0; k < hs.size(); ++k)
                if (hs[k].i == b[0] && hs[k].j == b[1]) return static_cast<int>(k);
        }
    throw NotHyperplanes("hyperplaneIndex: malformed hyperplane");
}

int hyperplaneIndex(const Ambient& ambient, const SubspaceB& s) {
    if (ambient.family != Family::TypeB || !isHyperplane(ambient, s))
        throw NotHyperplanes("hyperplaneIndex: not a type B hyperplane");
    auto hs = canonicalHyperplanesB(ambient.n);
    if (s.zeroSet().size() == 1) {
        int i = s.zeroSet()[0];
        for (size_t k = 0; k < hs.size(); ++k)
            if (hs[k].j == 0 && hs[k].i == i) return static_cast<int>(k);
    } else if (s.zeroSet().empty()) {
        for (const auto& [mem, sg] : s.signedBlocks())
            if (mem.size() == 2) {
                for (size_t k = 0; k < hs.size(); ++k)
                    if (hs[k].j != 0 && hs[k].i == mem[0] && hs[k].j == mem[1] && hs[k].tau == sg[1])
                        return static_cast<int>(k);
            }
    }
    throw NotHyperplanes("hyperplaneIndex: malformed hyperplane");
}

Arrangement fullReflectionArrangement(const Ambient& ambient) {
    if (ambient.family == Family::TypeA) {
        std::vector<SubspaceA> subs;
        for (const auto& h : canonicalHyperplanesA(ambient.n))
            subs.push_back(SubspaceA::fromBlocks(ambient.n, {{h.i, h.j}}));
        return Arrangement::typeA(ambient.n, std::move(subs));
    }
    std::vector<SubspaceB> subs;
    for (const auto& h : canonicalHyperplanesB(ambient.n)) {
        if (h.j == 0)
            subs.push_back(SubspaceB::fromParts(ambient.n, {h.i}, {}));
        else
            subs.push_back(SubspaceB::fromParts(ambient.n, {}, {{{h.i, h.j}, {1, h.tau}}}));
    }
    return Arrangement::typeB(ambient.n, std::move(subs));
}

}  // namespace arrlab
