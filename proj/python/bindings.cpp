// Python bindings for the main operations: partitions and cores, k-tableaux,
// monomial expansions, polytope checks, and affine Stanley polynomials.
// Partitions cross the boundary as lists of parts; expansions as
// {tuple(parts): coefficient} dictionaries.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kschur/affine.hpp"
#include "kschur/core.hpp"
#include "kschur/cylindric.hpp"
#include "kschur/polytope.hpp"
#include "kschur/symfunc.hpp"
#include "kschur/tableau.hpp"

namespace py = pybind11;
using namespace kschur;

namespace {

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

py::dict expansion_to_dict(const MonExpansion& f) {
    py::dict out;
    for (const auto& [mu, c] : f.coeffs) out[py::tuple(py::cast(mu.parts()))] = c;
    return out;
}

py::dict coeffs_to_dict(const std::map<Partition, long long>& coeffs) {
    py::dict out;
    for (const auto& [mu, c] : coeffs) out[py::tuple(py::cast(mu.parts()))] = c;
    return out;
}

MonExpansion expansion_from_dict(const py::dict& coeffs, int degree) {
    MonExpansion f;
    f.degree = degree;
    for (auto item : coeffs)
        f.add(Partition(item.first.cast<std::vector<int>>()),
              item.second.cast<long long>());
    return f;
}

}  // namespace

PYBIND11_MODULE(_kschur, m) {
    m.doc() = "dual k-Schur combinatorics engine";

    // partitions
    m.def("conjugate", [](const std::vector<int>& lam) {
        return conjugate(to_partition(lam)).parts();
    });
    m.def("dominates", [](const std::vector<int>& mu, const std::vector<int>& lam) {
        return dominates(to_partition(mu), to_partition(lam));
    });
    m.def("hook_length", [](const std::vector<int>& lam, int row, int col) {
        return hook_length(to_partition(lam), {row, col});
    });
    m.def("residue", [](int row, int col, int k) { return residue({row, col}, k); });
    m.def("sort_to_partition",
          [](const Composition& alpha) { return sort_to_partition(alpha).parts(); });

    // cores
    m.def("is_core", [](const std::vector<int>& lam, int k) {
        return is_core(to_partition(lam), k);
    });
    m.def("bounded_to_core", [](const std::vector<int>& lam, int k) {
        CoreConstruction cc = bounded_to_core(to_partition(lam), k);
        py::dict out;
        out["core"] = cc.core.shape.parts();
        out["shifts"] = cc.shifts;
        out["rho"] = cc.inner.parts();
        out["residue_sets"] = row_residue_sets(cc);
        return out;
    });
    m.def("core_to_bounded", [](const std::vector<int>& gamma, int k) {
        return core_to_bounded(as_core(to_partition(gamma), k)).parts();
    });
    m.def("apply_generator",
          [](const std::vector<int>& gamma, int k, int i, const std::string& mode) {
              GeneratorMode gm = mode == "add" ? GeneratorMode::add : GeneratorMode::remove;
              return apply_generator(as_core(to_partition(gamma), k), i, gm).shape.parts();
          });

    // tableaux
    m.def("fayers_ssyt", [](const std::vector<int>& lam, const std::vector<int>& mu) {
        FayersResult fr = fayers_ssyt(to_partition(lam), to_partition(mu));
        py::dict out;
        out["rows"] = fr.tableau.rows;
        py::list chain;
        for (const Partition& p : fr.chain) chain.append(p.parts());
        out["chain"] = chain;
        return out;
    });
    m.def("build_kssyt",
          [](const std::vector<int>& lam, const std::vector<int>& mu, int k) {
              KTableau t = build_kssyt(to_partition(lam), to_partition(mu), k);
              py::dict out;
              out["core"] = t.core.shape.parts();
              out["rows"] = t.rows;
              out["k_weight"] = t.k_weight;
              return out;
          });
    m.def("validate_kssyt",
          [](const std::vector<int>& core_shape, int k,
             const std::vector<std::vector<int>>& rows) {
              return validate_kssyt(as_core(to_partition(core_shape), k), rows);
          });
    m.def("enumerate_kssyts",
          [](const std::vector<int>& lam, const Composition& alpha, int k) {
              py::list out;
              for (const KTableau& t : enumerate_kssyts(to_partition(lam), alpha, k))
                  out.append(t.rows);
              return out;
          });
    m.def("k_kostka", [](const std::vector<int>& lam, const Composition& alpha, int k) {
        return k_kostka(to_partition(lam), alpha, k);
    });
    m.def("kostka", [](const std::vector<int>& lam, const Composition& mu) {
        return kostka(to_partition(lam), mu);
    });

    // symmetric functions
    m.def("schur_monomials", [](const std::vector<int>& lam) {
        return expansion_to_dict(schur_monomials(to_partition(lam)));
    });
    m.def("dual_k_schur_monomials", [](const std::vector<int>& lam, int k) {
        return expansion_to_dict(dual_k_schur_monomials(to_partition(lam), k));
    });
    m.def("complete_homogeneous_monomials", [](const std::vector<int>& lam) {
        return expansion_to_dict(complete_homogeneous_monomials(to_partition(lam)));
    });
    m.def("k_schur_monomials", [](const std::vector<int>& lam, int k) {
        return expansion_to_dict(k_schur_monomials(to_partition(lam), k));
    });
    m.def("decompose_in_basis",
          [](const py::dict& coeffs, int degree, const std::string& basis, int k) {
              Basis b = basis == "schur" ? Basis::schur : Basis::dual_k_schur;
              return coeffs_to_dict(
                  decompose_in_basis(expansion_from_dict(coeffs, degree), b, k).coeffs);
          },
          py::arg("coeffs"), py::arg("degree"), py::arg("basis"), py::arg("k") = 0);
    m.def("support", [](const py::dict& coeffs, int degree, int n) {
        return support(expansion_from_dict(coeffs, degree), n).points;
    });

    // polytopes
    m.def("permutahedron_points", [](const std::vector<int>& lam, int n) {
        return permutahedron_points(to_partition(lam), n).points;
    });
    m.def("is_m_convex", [](const std::vector<std::vector<int>>& points, int n) {
        std::vector<std::vector<int>> sorted_points(points);
        std::sort(sorted_points.begin(), sorted_points.end());
        return is_m_convex(Support{n, std::move(sorted_points)});
    });
    m.def("m_convex_witness", [](const std::vector<std::vector<int>>& points, int n)
              -> py::object {
        std::vector<std::vector<int>> sorted_points(points);
        std::sort(sorted_points.begin(), sorted_points.end());
        auto w = m_convex_violation(Support{n, std::move(sorted_points)});
        if (!w) return py::none();
        return py::make_tuple(w->alpha, w->beta, w->index);
    });
    m.def("is_snp_symmetric", [](const py::dict& coeffs, int degree, int n) {
        return is_snp_symmetric(expansion_from_dict(coeffs, degree), n);
    });
    m.def("lorentzian_check", [](const py::dict& coeffs, int degree, int n) {
        return lorentzian_check(normalize(expansion_from_dict(coeffs, degree), n));
    });
    m.def("rado_containment",
          [](const std::vector<int>& mu, const std::vector<int>& lam, int n) {
              return rado_containment(to_partition(mu), to_partition(lam), n);
          });

    // affine permutations
    m.def("from_word", [](const std::vector<int>& word, int k) {
        return from_word(word, k).window();
    });
    m.def("affine_length", [](const std::vector<int>& window, int k) {
        return length(AffinePermutation(k, window));
    });
    m.def("is_reduced", &is_reduced);
    m.def("code", [](const std::vector<int>& window, int k) {
        return code(AffinePermutation(k, window));
    });
    m.def("mu_of", [](const std::vector<int>& window, int k) {
        return mu_of(AffinePermutation(k, window)).parts();
    });
    m.def("affine_stanley_monomials", [](const std::vector<int>& word, int k) {
        return expansion_to_dict(affine_stanley_monomials(from_word(word, k)));
    });
    m.def("dual_k_schur_coeffs", [](const std::vector<int>& word, int k) {
        return coeffs_to_dict(dual_k_schur_coeffs(from_word(word, k)).coeffs);
    });
    m.def("is_321_avoiding", [](const std::vector<int>& word, int k) {
        return is_321_avoiding(from_word(word, k));
    });

    // cylindric shapes: (n, m, profile) triples
    m.def("cylindric_skew_schur_monomials",
          [](int n, int m, const std::vector<int>& outer, const std::vector<int>& inner) {
              CylindricShape o(n, m, outer), i(n, m, inner);
              return expansion_to_dict(
                  cylindric_skew_schur_monomials(o, i, cyl_period_boxes(o, i)));
          });
}
