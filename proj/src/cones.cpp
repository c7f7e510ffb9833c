#include "dstar/cones.hpp"

#include <algorithm>

#include "dstar/errors.hpp"
#include "dstar/matrix.hpp"

namespace dstar {

const LatticePoint kV1{1, 0, 0};
const LatticePoint kV2{0, 2, 1};
const LatticePoint kV3{0, 0, 1};
const LatticePoint kV4{0, 1, 1};
const LatticePoint kV5{2, 2, 1};
const LatticePoint kV6{1, 2, 1};

bool ConeSpec::contains(const LatticePoint& e) const {
    for (const LinIneq& q : ineqs) {
        long v = static_cast<long>(q.a[0]) * e[0] + static_cast<long>(q.a[1]) * e[1] +
                 static_cast<long>(q.a[2]) * e[2];
        if (q.strict ? v <= 0 : v < 0) return false;
    }
    return true;
}

namespace {

const LinIneq kE1{{1, 0, 0}, false};
const LinIneq kE2{{0, 1, 0}, false};
const LinIneq kE3{{0, 0, 1}, false};

ConeSpec make_cone(std::string name, std::vector<ConeGen> gens, std::vector<LinIneq> ineqs) {
    ConeSpec c;
    c.name = std::move(name);
    c.gens = std::move(gens);
    c.ineqs = std::move(ineqs);
    return c;
}

}  // namespace

const ConeSpec& cone_C134() {
    // e3 >= e2 inside the octant.
    static const ConeSpec c = make_cone(
        "C134", {{kV1, false}, {kV3, false}, {kV4, false}},
        {kE1, kE2, kE3, {{0, -1, 1}, false}});
    return c;
}

const ConeSpec& cone_C145p() {
    // e2 > e3, 2e3 >= e2, e1 + e3 >= e2, e1 + 2e3 >= 2e2.
    static const ConeSpec c = make_cone(
        "C145+", {{kV1, false}, {kV4, false}, {kV5, true}},
        {kE1, kE2, kE3, {{0, 1, -1}, true}, {{0, -1, 2}, false}, {{1, -1, 1}, false},
         {{1, -2, 2}, false}});
    return c;
}

const ConeSpec& cone_C456p() {
    // e2 > e3, 2e3 >= e2, e1 + e3 >= e2, 2e2 > e1 + 2e3.
    static const ConeSpec c = make_cone(
        "C456+", {{kV4, false}, {kV5, false}, {kV6, true}},
        {kE1, kE2, kE3, {{0, 1, -1}, true}, {{0, -1, 2}, false}, {{1, -1, 1}, false},
         {{-1, 2, -2}, true}});
    return c;
}

const ConeSpec& cone_C462p() {
    // 2e3 >= e2, e2 > e1 + e3.
    static const ConeSpec c = make_cone(
        "C462+", {{kV4, false}, {kV6, false}, {kV2, true}},
        {kE1, kE2, kE3, {{0, -1, 2}, false}, {{-1, 1, -1}, true}});
    return c;
}

const ConeSpec& cone_C123() {
    static const ConeSpec c = make_cone(
        "C123", {{kV1, false}, {kV2, false}, {kV3, false}},
        {kE1, kE2, kE3, {{0, -1, 2}, false}});
    return c;
}

const ConeSpec& cone_Csigma() {
    static const ConeSpec c = make_cone(
        "Csigma", {{kV1, true}, {kV2, false}, {kV3, false}},
        {{{1, 0, 0}, true}, kE2, kE3, {{0, -1, 2}, false}});
    return c;
}

const ConeSpec& cone_C23() {
    static const ConeSpec c = make_cone(
        "C23", {{kV2, false}, {kV3, false}},
        {kE1, {{-1, 0, 0}, false}, kE2, kE3, {{0, -1, 2}, false}});
    return c;
}

const ConeSpec& cone_C34() {
    static const ConeSpec c = make_cone(
        "C34", {{kV3, false}, {kV4, false}},
        {kE1, {{-1, 0, 0}, false}, kE2, kE3, {{0, -1, 1}, false}});
    return c;
}

const ConeSpec& cone_C42p() {
    static const ConeSpec c = make_cone(
        "C42+", {{kV4, false}, {kV2, true}},
        {kE1, {{-1, 0, 0}, false}, kE2, kE3, {{0, -1, 2}, false}, {{0, 1, -1}, true}});
    return c;
}

std::set<LatticePoint> members_up_to(const ConeSpec& cone, int bound) {
    if (bound < 0) throw InvalidArgs("members_up_to: bound >= 0");
    std::set<LatticePoint> out;
    for (int e1 = 0; e1 <= bound; ++e1)
        for (int e2 = 0; e2 <= bound; ++e2)
            for (int e3 = 0; e3 <= bound; ++e3) {
                LatticePoint e{e1, e2, e3};
                if (cone.contains(e)) out.insert(e);
            }
    return out;
}

std::set<LatticePoint> members_via_generators(const ConeSpec& cone, int bound) {
    // Every generator has a positive coordinate, so contributing multiples
    // never exceed the coordinate bound.
    std::set<LatticePoint> out;
    const auto& g = cone.gens;
    std::vector<int> lo(g.size()), hi(g.size(), bound);
    for (size_t i = 0; i < g.size(); ++i) lo[i] = g[i].open ? 1 : 0;
    std::vector<int> r = lo;
    while (true) {
        LatticePoint e{0, 0, 0};
        for (size_t i = 0; i < g.size(); ++i)
            for (int j = 0; j < 3; ++j) e[j] += r[i] * g[i].v[j];
        if (e[0] <= bound && e[1] <= bound && e[2] <= bound) out.insert(e);
        size_t pos = 0;
        while (pos < g.size()) {
            if (++r[pos] <= hi[pos]) break;
            r[pos] = lo[pos];
            ++pos;
        }
        if (pos == g.size()) break;
    }
    return out;
}

std::set<LatticePoint> fundamental_domain_points(const std::vector<ConeGen>& gens) {
    const int k = static_cast<int>(gens.size());
    if (k < 1 || k > 3) throw InvalidArgs("fundamental domain needs 1..3 generators");
    QMat A(3, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < 3; ++i) A.at(i, j) = gens[j].v[i];
    if (A.rank() != k)
        throw DegenerateGenerators("fundamental domain: generators not independent");

    std::array<int, 3> box{0, 0, 0};
    for (int j = 0; j < 3; ++j) {
        for (const ConeGen& g : gens) box[j] += std::max(0, g.v[j]);
    }
    std::set<LatticePoint> out;
    for (int e1 = 0; e1 <= box[0]; ++e1)
        for (int e2 = 0; e2 <= box[1]; ++e2)
            for (int e3 = 0; e3 <= box[2]; ++e3) {
                std::vector<Rat> b{Rat(e1), Rat(e2), Rat(e3)};
                bool ok = false;
                std::vector<Rat> c = QMat::solve_unique(A, b, &ok);
                if (!ok) continue;
                bool inside = true;
                for (const Rat& ci : c)
                    if (ci < 0 || ci >= 1) inside = false;
                if (inside) out.insert({e1, e2, e3});
            }
    return out;
}

bool verify_partition(const std::vector<const ConeSpec*>& parts, const ConeSpec& whole,
                      int bound) {
    std::set<LatticePoint> whole_pts = members_up_to(whole, bound);
    std::set<LatticePoint> seen;
    for (const ConeSpec* part : parts) {
        for (const LatticePoint& e : members_up_to(*part, bound)) {
            if (!seen.insert(e).second) return false;  // overlap
        }
    }
    return seen == whole_pts;
}

FactoredRational cone_gf(const ConeSpec& cone, const std::vector<Monomial>& weights) {
    if (weights.size() != cone.gens.size())
        throw InvalidArgs("cone_gf: one weight per generator required");
    auto fd = fundamental_domain_points(cone.gens);
    if (fd.size() != 1 || *fd.begin() != LatticePoint{0, 0, 0})
        throw NotSimple("cone_gf: " + cone.name + " is not a simple cone");
    FactoredRational r = FactoredRational::one();
    for (size_t i = 0; i < weights.size(); ++i) {
        r = r.over(weights[i]);
        if (cone.gens[i].open) r = r.times_monomial(weights[i]);
    }
    return r;
}

std::optional<std::vector<int>> generator_coordinates(const ConeSpec& cone,
                                                      const LatticePoint& e) {
    const int k = static_cast<int>(cone.gens.size());
    QMat A(3, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < 3; ++i) A.at(i, j) = cone.gens[j].v[i];
    std::vector<Rat> b{Rat(e[0]), Rat(e[1]), Rat(e[2])};
    bool ok = false;
    std::vector<Rat> c = QMat::solve_unique(A, b, &ok);
    if (!ok) return std::nullopt;
    std::vector<int> r(k);
    for (int i = 0; i < k; ++i) {
        if (!is_integer(c[i]) || c[i] < 0) return std::nullopt;
        if (cone.gens[i].open && c[i] == 0) return std::nullopt;
        r[i] = static_cast<int>(c[i].get_num().get_si());
    }
    return r;
}

TruncatedSeries weighted_enumeration(const ConeSpec& cone,
                                     const std::vector<Monomial>& weights, int order,
                                     const Grading& grading) {
    for (const Monomial& w : weights)
        if (grading.degree(w) <= 0)
            throw InvalidArgs("weighted_enumeration: weights must have positive degree");
    // Any point of degree <= order is a generator combination with
    // sum r_i <= order, so its coordinates are at most 2*order.
    const int bound = 2 * order;
    TruncatedSeries s(grading, order);
    for (const LatticePoint& e : members_up_to(cone, bound)) {
        auto r = generator_coordinates(cone, e);
        if (!r)
            throw NotSimple("weighted_enumeration: point not a generator combination in " +
                            cone.name);
        Monomial w;
        for (size_t i = 0; i < weights.size(); ++i) w = w * weights[i].pow((*r)[i]);
        s.add_term(w, Rat(1));
    }
    return s;
}

CaseTag case_of(const LatticePoint& e) {
    if (!cone_C123().contains(e))
        throw OutsideIntegralCone("case_of: point outside C123");
    bool in1 = cone_C134().contains(e);
    bool in2a = cone_C145p().contains(e);
    bool in2b = cone_C456p().contains(e);
    bool in3 = cone_C462p().contains(e);
    if (in1 + in2a + in2b + in3 != 1)
        throw InvalidArgs("case_of: case cones do not partition at this point");
    if (in1) return CaseTag::Case1;
    if (in2a) return CaseTag::Case2a;
    if (in2b) return CaseTag::Case2b;
    return CaseTag::Case3;
}

std::vector<Monomial> builtin_weights(const ConeSpec& cone) {
    // Weight of a generator v in its cone's case transform:
    // Case 1 uses (pX1, p^{-3}X2, p^3 X3), Case 2a (pX1, pX2, p^{-1}X3),
    // Case 2b (p^4 X1, p^{-5} X2, p^5 X3), Case 3 (p^{-1} X1, X2, X3).
    auto w = [](const char* s) { return parse_mono(s); };
    if (cone.name == "C134") return {w("p X1"), w("p^3 X3"), w("X2 X3")};
    if (cone.name == "C145+") return {w("p X1"), w("X2 X3"), w("p^3 X1^2 X2^2 X3")};
    if (cone.name == "C456+") return {w("X2 X3"), w("p^3 X1^2 X2^2 X3"), w("p^-1 X1 X2^2 X3")};
    if (cone.name == "C462+") return {w("X2 X3"), w("p^-1 X1 X2^2 X3"), w("X2^2 X3")};
    if (cone.name == "C34") return {w("p^3 X3"), w("X2 X3")};
    if (cone.name == "C42+") return {w("X2 X3"), w("X2^2 X3")};
    throw InvalidArgs("no built-in weights for cone " + cone.name);
}

}  // namespace dstar
