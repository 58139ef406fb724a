#include "arrlab/faces.hpp"

#include <algorithm>
#include <set>
#include <type_traits>

namespace arrlab {

std::vector<std::vector<int>> FaceA::blocks() const {
    std::vector<std::vector<int>> out(k);
    for (size_t c = 0; c < blockOf.size(); ++c) out[blockOf[c]].push_back(static_cast<int>(c) + 1);
    return out;
}

std::vector<int> FaceB::zeroSet() const {
    std::vector<int> out;
    for (size_t c = 0; c < code.size(); ++c)
        if (code[c] == 0) out.push_back(static_cast<int>(c) + 1);
    return out;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> FaceB::signedLevels() const {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out(k);
    for (size_t c = 0; c < code.size(); ++c) {
        if (code[c] == 0) continue;
        int l = (code[c] + 1) / 2;
        out[l - 1].first.push_back(static_cast<int>(c) + 1);
        out[l - 1].second.push_back(code[c] % 2 == 1 ? 1 : -1);
    }
    return out;
}

void forEachFaceA(int n, const std::function<void(const FaceA&)>& fn) {
    if (n < 1) throw ValidationError("forEachFaceA: n must be >= 1");
    if (n > 31) throw EnumerationBudget("forEachFaceA: n exceeds the representable range");
    std::vector<int> v(n, 0);
    FaceA f;
    while (true) {
        int mx = 0;
        uint32_t used = 0;
        for (int c : v) {
            used |= 1u << c;
            mx = std::max(mx, c);
        }
        int k = mx + 1;
        if (k >= 2 && used == (1u << k) - 1u) {
            f.blockOf = v;
            f.k = k;
            fn(f);
        }
        int pos = n - 1;
        while (pos >= 0 && v[pos] == n - 1) v[pos--] = 0;
        if (pos < 0) break;
        ++v[pos];
    }
}

void forEachFaceB(int n, const std::function<void(const FaceB&)>& fn) {
    if (n < 0) throw ValidationError("forEachFaceB: n must be >= 0");
    if (n > 15) throw EnumerationBudget("forEachFaceB: n exceeds the representable range");
    if (n == 0) return;  // no nonempty faces over zero coordinates
    std::vector<int> v(n, 0);
    FaceB f;
    while (true) {
        int mx = 0;
        uint32_t used = 0;
        for (int c : v) {
            int l = (c + 1) / 2;
            if (l > 0) used |= 1u << l;
            mx = std::max(mx, l);
        }
        if (mx >= 1 && used == ((1u << (mx + 1)) - 2u)) {  // levels 1..mx all present
            f.code = v;
            f.k = mx;
            fn(f);
        }
        int pos = n - 1;
        while (pos >= 0 && v[pos] == 2 * n) v[pos--] = 0;
        if (pos < 0) break;
        ++v[pos];
    }
}

std::vector<FaceA> enumerateFacesA(int n) {
    std::vector<FaceA> out;
    forEachFaceA(n, [&](const FaceA& f) { out.push_back(f); });
    return out;
}

std::vector<FaceB> enumerateFacesB(int n) {
    std::vector<FaceB> out;
    forEachFaceB(n, [&](const FaceB& f) { out.push_back(f); });
    return out;
}

SubspaceA faceSupport(const FaceA& f) {
    return SubspaceA::fromBlocks(static_cast<int>(f.blockOf.size()), f.blocks());
}

SubspaceB faceSupport(const FaceB& f) {
    return SubspaceB::fromParts(static_cast<int>(f.code.size()), f.zeroSet(), f.signedLevels());
}

bool faceInLink(const FaceA& f, const Arrangement& a) {
    if (a.ambient().family != Family::TypeA ||
        static_cast<int>(f.blockOf.size()) != a.ambient().n)
        throw AmbientMismatch("faceInLink: face and arrangement ambients differ");
    for (const auto& s : a.subspacesA()) {
        bool inside = true;
        for (const auto& b : s.blocks()) {
            int v0 = f.blockOf[b[0] - 1];
            for (size_t u = 1; u < b.size(); ++u)
                if (f.blockOf[b[u] - 1] != v0) {
                    inside = false;
                    break;
                }
            if (!inside) break;
        }
        if (inside) return true;
    }
    return false;
}

namespace {

// A signed block constrains the cell iff it is entirely zero on the face or
// lies in one level with a coherent relative sign pattern.
bool signedBlockInside(const FaceB& f, const std::vector<int>& mem, const std::vector<int>& sg) {
    bool allZero = true;
    for (int c : mem)
        if (f.levelOf(c) != 0) {
            allZero = false;
            break;
        }
    if (allZero) return true;
    int l0 = f.levelOf(mem[0]);
    if (l0 == 0) return false;
    int e0 = sg[0] * f.signOf(mem[0]);
    for (size_t u = 1; u < mem.size(); ++u) {
        if (f.levelOf(mem[u]) != l0) return false;
        if (sg[u] * f.signOf(mem[u]) != e0) return false;
    }
    return true;
}

}  // namespace

bool faceInLink(const FaceB& f, const Arrangement& a) {
    if (a.ambient().family != Family::TypeB || static_cast<int>(f.code.size()) != a.ambient().n)
        throw AmbientMismatch("faceInLink: face and arrangement ambients differ");
    for (const auto& s : a.subspacesB()) {
        bool inside = true;
        for (int z : s.zeroSet())
            if (f.levelOf(z) != 0) {
                inside = false;
                break;
            }
        if (inside)
            for (const auto& [mem, sg] : s.signedBlocks())
                if (!signedBlockInside(f, mem, sg)) {
                    inside = false;
                    break;
                }
        if (inside) return true;
    }
    return false;
}

FVector linkFVector(const Arrangement& a) {
    FVector f;
    if (a.empty()) return f;
    const int d = a.maxDim();
    f.counts.assign(d + 1, Int(0));
    f.counts[0] = 1;
    int top = -1;
    if (a.ambient().family == Family::TypeA) {
        forEachFaceA(a.ambient().n, [&](const FaceA& fc) {
            if (faceInLink(fc, a)) {
                f.counts.at(fc.dim() + 1) += 1;
                top = std::max(top, fc.dim());
            }
        });
    } else {
        forEachFaceB(a.ambient().n, [&](const FaceB& fc) {
            if (faceInLink(fc, a)) {
                f.counts.at(fc.dim() + 1) += 1;
                top = std::max(top, fc.dim());
            }
        });
    }
    if (top != d - 1) throw Error("linkFVector: top dimension disagrees with d(A)-1");
    return f;
}

FVector coxeterFVector(const Ambient& h) {
    FVector f;
    f.counts.assign(h.essentialDim() + 1, Int(0));
    f.counts[0] = 1;
    if (h.family == Family::TypeA)
        forEachFaceA(h.n, [&](const FaceA& fc) { f.counts.at(fc.dim() + 1) += 1; });
    else
        forEachFaceB(h.n, [&](const FaceB& fc) { f.counts.at(fc.dim() + 1) += 1; });
    return f;
}

IntPolynomial hPolynomial(const FVector& f) {
    if (f.isVoid()) return IntPolynomial();
    const int d = f.d();
    IntPolynomial h;
    for (int j = 0; j <= d; ++j)
        h = h + xMinusOnePower(d - j) * IntPolynomial::constant(f.counts[j]);
    return h;
}

IntPolynomial reverseH(const FVector& f) {
    if (f.isVoid()) return IntPolynomial();
    const int d = f.d();
    IntPolynomial h = hPolynomial(f);
    std::vector<Int> rev(d + 1, Int(0));
    for (int i = 0; i <= d; ++i) rev[i] = h.coeff(d - i);
    return IntPolynomial(std::move(rev));
}

Int reducedEuler(const FVector& f) {
    Int chi = 0;
    for (size_t j = 0; j < f.counts.size(); ++j)
        chi += (j % 2 == 0) ? -f.counts[j] : f.counts[j];
    return chi;
}

FVector coneFVector(const FVector& f) {
    FVector out;
    if (f.isVoid()) {
        out.counts = {Int(1), Int(1)};
        return out;
    }
    const size_t len = f.counts.size();
    out.counts.assign(len + 1, Int(0));
    out.counts[0] = 1;
    for (size_t j = 1; j <= len; ++j) {
        Int v = f.counts[j - 1];
        if (j < len) v += f.counts[j];
        out.counts[j] = v;
    }
    return out;
}

Int hilbertFunction(const FVector& f, long long m) {
    if (m < 0) throw ValidationError("hilbertFunction: m must be >= 0");
    if (f.isVoid()) return 0;
    if (m == 0) return 1;
    Int h = 0;
    for (size_t j = 1; j < f.counts.size(); ++j)
        h += f.counts[j] * binomialInt(Int(m - 1), static_cast<long long>(j) - 1);
    return h;
}

RationalSeries hilbertSeries(const FVector& f) {
    if (f.isVoid()) return RationalSeries();
    return RationalSeries(reverseH(f), f.d());
}

AbstractComplex coneComplex(const AbstractComplex& c) {
    AbstractComplex out;
    out.vertexCount = c.vertexCount + 1;
    if (c.facets.empty()) {
        out.facets = {{c.vertexCount}};
        return out;
    }
    out.facets.reserve(c.facets.size());
    for (auto f : c.facets) {
        f.push_back(c.vertexCount);  // new vertex has the largest index
        out.facets.push_back(std::move(f));
    }
    return out;
}

FVector abstractFVector(const AbstractComplex& c) {
    FVector out;
    if (c.facets.empty()) return out;
    std::set<std::vector<int>> faces;
    size_t top = 0;
    for (const auto& f : c.facets) {
        if (f.size() > 25) throw ValidationError("abstractFVector: facet too large to materialize");
        top = std::max(top, f.size());
        for (uint32_t mask = 0; mask < (1u << f.size()); ++mask) {
            std::vector<int> sub;
            for (size_t u = 0; u < f.size(); ++u)
                if (mask & (1u << u)) sub.push_back(f[u]);
            faces.insert(std::move(sub));
        }
    }
    out.counts.assign(top + 1, Int(0));
    for (const auto& f : faces) out.counts[f.size()] += 1;
    return out;
}

namespace {

// Identity of the i-th vertex of a type A face: the union of the first i
// blocks, 1 <= i <= k-1.
uint32_t vertexMask(const FaceA& f, int i) {
    uint32_t m = 0;
    for (size_t c = 0; c < f.blockOf.size(); ++c)
        if (f.blockOf[c] < i) m |= 1u << c;
    return m;
}

// Identity of the i-th vertex of a type B face: coordinates at level >= i
// (keep mask) with their negative-sign subset, 1 <= i <= k.
std::pair<uint32_t, uint32_t> vertexMask(const FaceB& f, int i) {
    uint32_t keep = 0, neg = 0;
    for (size_t c = 0; c < f.code.size(); ++c) {
        int l = f.levelOf(static_cast<int>(c) + 1);
        if (l >= i) {
            keep |= 1u << c;
            if (f.signOf(static_cast<int>(c) + 1) < 0) neg |= 1u << c;
        }
    }
    return {keep, neg};
}

std::vector<FaceA> minimalCofaces(const FaceA& f) {
    std::vector<FaceA> out;
    auto bl = f.blocks();
    for (int t = 0; t < f.k; ++t) {
        const auto& b = bl[t];
        const size_t s = b.size();
        if (s < 2) continue;
        for (uint32_t m = 1; m + 1 < (1u << s); ++m) {
            FaceA g;
            g.k = f.k + 1;
            g.blockOf.resize(f.blockOf.size());
            for (size_t c = 0; c < f.blockOf.size(); ++c) {
                int v = f.blockOf[c];
                g.blockOf[c] = v < t ? v : v + 1;
            }
            for (size_t u = 0; u < s; ++u)
                g.blockOf[b[u] - 1] = (m & (1u << u)) ? t : t + 1;
            out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<FaceB> minimalCofaces(const FaceB& f) {
    std::vector<FaceB> out;
    auto levels = f.signedLevels();
    auto zero = f.zeroSet();
    auto encode = [](int level, int sign) { return sign > 0 ? 2 * level - 1 : 2 * level; };

    // Split one level into two adjacent levels; lower part chosen by mask.
    for (int t = 1; t <= f.k; ++t) {
        const auto& mem = levels[t - 1].first;
        const size_t s = mem.size();
        if (s < 2) continue;
        for (uint32_t m = 1; m + 1 < (1u << s); ++m) {
            FaceB g;
            g.k = f.k + 1;
            g.code.resize(f.code.size());
            for (size_t c = 0; c < f.code.size(); ++c) {
                int l = f.levelOf(static_cast<int>(c) + 1);
                int sg = f.signOf(static_cast<int>(c) + 1);
                g.code[c] = (l == 0) ? 0 : encode(l > t ? l + 1 : l, sg);
            }
            for (size_t u = 0; u < s; ++u) {
                int c = mem[u];
                int sg = f.signOf(c);
                g.code[c - 1] = encode((m & (1u << u)) ? t : t + 1, sg);
            }
            out.push_back(std::move(g));
        }
    }

    // Pull a nonempty subset of the zero set out as a new lowest level, with
    // any sign pattern (zeroing forgets signs).
    const size_t z = zero.size();
    for (uint32_t m = 1; m < (1u << z); ++m) {
        std::vector<int> chosen;
        for (size_t u = 0; u < z; ++u)
            if (m & (1u << u)) chosen.push_back(zero[u]);
        for (uint32_t sm = 0; sm < (1u << chosen.size()); ++sm) {
            FaceB g;
            g.k = f.k + 1;
            g.code.resize(f.code.size());
            for (size_t c = 0; c < f.code.size(); ++c) {
                int l = f.levelOf(static_cast<int>(c) + 1);
                int sg = f.signOf(static_cast<int>(c) + 1);
                g.code[c] = (l == 0) ? 0 : encode(l + 1, sg);
            }
            for (size_t u = 0; u < chosen.size(); ++u)
                g.code[chosen[u] - 1] = encode(1, (sm & (1u << u)) ? -1 : 1);
            out.push_back(std::move(g));
        }
    }
    return out;
}

}  // namespace

std::vector<int> LinkComplex::vertexIndices(const FaceA& f) const {
    std::vector<int> out;
    for (int i = 1; i <= f.k - 1; ++i) {
        auto it = indexA.find(vertexMask(f, i));
        if (it == indexA.end()) throw Error("LinkComplex: face vertex missing from complex");
        out.push_back(it->second);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> LinkComplex::vertexIndices(const FaceB& f) const {
    std::vector<int> out;
    for (int i = 1; i <= f.k; ++i) {
        auto it = indexB.find(vertexMask(f, i));
        if (it == indexB.end()) throw Error("LinkComplex: face vertex missing from complex");
        out.push_back(it->second);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

template <class Face>
LinkComplex buildComplex(Family family, int n, const std::vector<Face>& faces,
                         const std::function<bool(const Face&)>& isFacet) {
    LinkComplex L;
    L.family = family;
    L.n = n;
    for (const auto& f : faces) {
        if (f.dim() != 0) continue;
        if constexpr (std::is_same_v<Face, FaceA>) {
            uint32_t m = vertexMask(f, 1);
            L.indexA.emplace(m, static_cast<int>(L.vertexMaskA.size()));
            L.vertexMaskA.push_back(m);
        } else {
            auto m = vertexMask(f, 1);
            L.indexB.emplace(m, static_cast<int>(L.vertexMaskB.size()));
            L.vertexMaskB.push_back(m);
        }
    }
    L.complex.vertexCount = static_cast<int>(
        family == Family::TypeA ? L.vertexMaskA.size() : L.vertexMaskB.size());
    for (const auto& f : faces)
        if (isFacet(f)) L.complex.facets.push_back(L.vertexIndices(f));
    return L;
}

}  // namespace

LinkComplex linkAbstract(const Arrangement& a) {
    if (a.empty() || a.maxDim() < 1)
        throw ValidationError("linkAbstract: requires a nonempty arrangement with d(A) >= 1");
    const int n = a.ambient().n;
    if (a.ambient().family == Family::TypeA) {
        std::vector<FaceA> inLink;
        forEachFaceA(n, [&](const FaceA& f) {
            if (faceInLink(f, a)) inLink.push_back(f);
        });
        std::function<bool(const FaceA&)> isFacet = [&](const FaceA& f) {
            for (const auto& g : minimalCofaces(f))
                if (faceInLink(g, a)) return false;
            return true;
        };
        return buildComplex<FaceA>(Family::TypeA, n, inLink, isFacet);
    }
    std::vector<FaceB> inLink;
    forEachFaceB(n, [&](const FaceB& f) {
        if (faceInLink(f, a)) inLink.push_back(f);
    });
    std::function<bool(const FaceB&)> isFacet = [&](const FaceB& f) {
        for (const auto& g : minimalCofaces(f))
            if (faceInLink(g, a)) return false;
        return true;
    };
    return buildComplex<FaceB>(Family::TypeB, n, inLink, isFacet);
}

LinkComplex coxeterAbstract(const Ambient& h) {
    if (h.essentialDim() < 1)
        throw ValidationError("coxeterAbstract: essential dimension must be >= 1");
    const int top = h.essentialDim() - 1;
    if (h.family == Family::TypeA) {
        std::vector<FaceA> faces = enumerateFacesA(h.n);
        std::function<bool(const FaceA&)> isFacet = [&](const FaceA& f) { return f.dim() == top; };
        return buildComplex<FaceA>(Family::TypeA, h.n, faces, isFacet);
    }
    std::vector<FaceB> faces = enumerateFacesB(h.n);
    std::function<bool(const FaceB&)> isFacet = [&](const FaceB& f) { return f.dim() == top; };
    return buildComplex<FaceB>(Family::TypeB, h.n, faces, isFacet);
}

}  // namespace arrlab
