#include "liepm/constructors.hpp"

#include "liepm/errors.hpp"

namespace liepm {

namespace {

Vector vec3(const Scalar& a, const Scalar& b, const Scalar& c) { return Vector{a, b, c}; }

Matrix elementary(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = 1;
    return m;
}

}  // namespace

LieAlgebra sl2() {
    return LieAlgebra::from_brackets("sl2", {"e", "h", "f"},
                                     {{0, 2, vec3(0, 1, 0)}, {1, 0, vec3(2, 0, 0)}, {1, 2, vec3(0, 0, -2)}});
}

LieAlgebra heisenberg() { return LieAlgebra::from_brackets("heisenberg", {"x", "y", "z"}, {{0, 1, vec3(0, 0, 1)}}); }

LieAlgebra g_special() {
    return LieAlgebra::from_brackets("g_special", {"x", "y", "z"}, {{0, 2, vec3(1, 0, 0)}, {1, 2, vec3(0, 1, 0)}});
}

LieAlgebra k_family(const Scalar& a, const Scalar& b) {
    return LieAlgebra::from_brackets("K(" + to_string(a) + "," + to_string(b) + ")", {"x", "y", "z"},
                                     {{0, 2, vec3(a, 0, 0)}, {1, 2, vec3(0, b, 0)}});
}

LieAlgebra a_family(const std::optional<Scalar>& r) {
    // A(r) = [[0,r,0],[1,1,0],[0,0,0]], A(inf) = [[0,1,0],[1,0,0],[0,0,0]], X = E13, Y = E23.
    Matrix A(3, 3);
    if (r) {
        A(0, 1) = *r;
        A(1, 0) = 1;
        A(1, 1) = 1;
    } else {
        A(0, 1) = 1;
        A(1, 0) = 1;
    }
    const std::string name = r ? "A(" + to_string(*r) + ")" : "A(inf)";
    return LieAlgebra::from_matrices(name, {"A", "X", "Y"}, {A, elementary(3, 0, 2), elementary(3, 1, 2)});
}

LieAlgebra abelian(std::size_t dim) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dim; ++i) {
        names.push_back(dim == 3 ? std::string(1, static_cast<char>('x' + i)) : "b" + std::to_string(i + 1));
    }
    return LieAlgebra::from_brackets("abelian" + std::to_string(dim), std::move(names), {});
}

LieAlgebra jacobson_case(char tag, const std::vector<Scalar>& p) {
    auto need = [&](std::size_t n) {
        if (p.size() != n) {
            throw InvalidArgument(std::string("jacobson case '") + tag + "' takes " + std::to_string(n) +
                                  " parameters");
        }
    };
    const std::vector<std::string> xyz{"x", "y", "z"};
    switch (tag) {
        case 'a':
            need(0);
            return abelian(3);
        case 'b':
            need(0);
            return heisenberg();
        case 'c':
            need(0);
            return LieAlgebra::from_brackets("jacobson_c", xyz, {{0, 1, vec3(1, 0, 0)}});
        case 'd':
            need(4);
            if (p[0] * p[3] - p[1] * p[2] == 0) {
                throw InvalidArgument("jacobson case d needs alpha*delta - beta*gamma != 0");
            }
            return LieAlgebra::from_brackets("jacobson_d", xyz,
                                             {{0, 1, vec3(0, 0, 0)}, {0, 2, vec3(p[0], p[1], 0)},
                                              {1, 2, vec3(p[2], p[3], 0)}});
        case 'e':
            need(2);
            if (p[0] * p[1] == 0) {
                throw InvalidArgument("jacobson case e needs alpha*beta != 0");
            }
            return LieAlgebra::from_brackets("jacobson_e", xyz,
                                             {{0, 1, vec3(0, 0, 1)}, {0, 2, vec3(0, p[0], 0)},
                                              {1, 2, vec3(p[1], 0, 0)}});
        default:
            throw InvalidArgument(std::string("unknown jacobson case '") + tag + "'");
    }
}

LieAlgebra sl3_chevalley() {
    Matrix h1(3, 3), h2(3, 3);
    h1(0, 0) = 1;
    h1(1, 1) = -1;
    h2(1, 1) = 1;
    h2(2, 2) = -1;
    return LieAlgebra::from_matrices(
        "sl3", {"e1", "e2", "e3", "h1", "h2", "f1", "f2", "f3"},
        {elementary(3, 0, 1), elementary(3, 1, 2), elementary(3, 0, 2), h1, h2, elementary(3, 1, 0),
         elementary(3, 2, 1), elementary(3, 2, 0)});
}

LieAlgebra borcherds_rank1_zero() {
    return LieAlgebra::from_brackets("borcherds_rank1_zero", {"e", "h", "f"}, {{0, 2, vec3(0, 1, 0)}});
}

Grading sl2_grading() { return Grading{1, {{1}, {0}, {-1}}}; }
Grading heisenberg_grading() { return Grading{1, {{1}, {-1}, {0}}}; }
Grading borcherds_rank1_grading() { return Grading{1, {{1}, {0}, {-1}}}; }

Grading sl3_root_grading() {
    return Grading{2, {{1, 0}, {0, 1}, {1, 1}, {0, 0}, {0, 0}, {-1, 0}, {0, -1}, {-1, -1}}};
}

namespace {

TriangularDecomposition rank1_triangular() {
    TriangularDecomposition t;
    t.gplus = Subspace::span(3, {unit_vector(3, 0)});
    t.cartan = Subspace::span(3, {unit_vector(3, 1)});
    t.gminus = Subspace::span(3, {unit_vector(3, 2)});
    t.e = {unit_vector(3, 0)};
    t.f = {unit_vector(3, 2)};
    return t;
}

}  // namespace

TriangularDecomposition sl2_triangular() { return rank1_triangular(); }
TriangularDecomposition borcherds_rank1_triangular() { return rank1_triangular(); }

TriangularDecomposition sl3_triangular() {
    TriangularDecomposition t;
    t.gplus = Subspace::span(8, {unit_vector(8, 0), unit_vector(8, 1), unit_vector(8, 2)});
    t.cartan = Subspace::span(8, {unit_vector(8, 3), unit_vector(8, 4)});
    t.gminus = Subspace::span(8, {unit_vector(8, 5), unit_vector(8, 6), unit_vector(8, 7)});
    t.e = {unit_vector(8, 0), unit_vector(8, 1)};
    t.f = {unit_vector(8, 5), unit_vector(8, 6)};
    return t;
}

std::optional<LieAlgebra> builtin_algebra(const std::string& name) {
    if (name == "sl2") {
        return sl2();
    }
    if (name == "heisenberg") {
        return heisenberg();
    }
    if (name == "g_special") {
        return g_special();
    }
    if (name == "sl3") {
        return sl3_chevalley();
    }
    if (name == "borcherds_rank1_zero") {
        return borcherds_rank1_zero();
    }
    if (name == "abelian3") {
        return abelian(3);
    }
    return std::nullopt;
}

}  // namespace liepm
