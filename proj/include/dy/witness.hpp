#pragma once

#include "dy/matrix.hpp"
#include "dy/report.hpp"

namespace dy::detail {

template <Field F>
Json col_json(const F& k, const Matrix<F>& m, std::size_t col) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(k.str(m.at(i, col)));
    return a;
}

template <Field F>
Json vec_json(const F& k, const std::vector<typename F::Elem>& v) {
    Json a = Json::array();
    for (const auto& e : v) a.push_back(k.str(e));
    return a;
}

/// Reports lhs == rhs as pass, or fail with the first differing basis column.
template <Field F>
void report_matrix_identity(CheckReport& rep, const F& k, const std::string& label,
                            const Matrix<F>& lhs, const Matrix<F>& rhs) {
    if (lhs == rhs) {
        rep.add_pass(label);
        return;
    }
    for (std::size_t j = 0; j < lhs.cols() && j < rhs.cols(); ++j)
        for (std::size_t i = 0; i < lhs.rows() && i < rhs.rows(); ++i)
            if (!k.eq(lhs.at(i, j), rhs.at(i, j))) {
                rep.add_fail(label, Json{{"basis_column", j},
                                         {"lhs", col_json(k, lhs, j)},
                                         {"rhs", col_json(k, rhs, j)}});
                return;
            }
    rep.add_fail(label, Json{{"shape_lhs", {lhs.rows(), lhs.cols()}},
                             {"shape_rhs", {rhs.rows(), rhs.cols()}}});
}

template <Field F>
Matrix<F> tensor_flip(const F& k, std::size_t a, std::size_t b) {
    Matrix<F> m(k, a * b, a * b);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) m.at(j * a + i, i * b + j) = k.one();
    return m;
}

}  // namespace dy::detail
