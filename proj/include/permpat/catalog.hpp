#pragma once

#include "permpat/series.hpp"

#include <string>
#include <vector>

namespace permpat {

// Named closed forms, all computed exactly to the requested order.
// catalog_names() lists the registry; unknown names throw.
Series catalog(const std::string& name, int order);
std::vector<std::string> catalog_names();

// statistic-marking series in z with polynomial coefficients in u
PolySeries peaks_H(int order);          // peaks of Dyck paths by height
PolySeries ascents_av132(int order);    // ascents across Av(132)
PolySeries bonds_f(int order);          // permutations by length and bonds
PolySeries distinct_patterns_h(int order);  // h(z,u) = f(zu, 1/u)

// bivariate simple-involution series (variables u = ltr-minima marker,
// v = rtl-maxima marker); name is one of s0, s1, s2
Bivar catalog_bivar(const std::string& name, int total_degree);

// series for Av^I(1342) and Av^I(2341), assembled from the structural
// equations by fixed-point iteration in the series ring
Series assemble_av1342(int order);
Series assemble_av2341(int order);

// residue of the printed minimal-polynomial relation for the 2341 series;
// zero through the certified order when the transcription is faithful
Series av2341_min_poly_residue(int order);

// closed-form counting formulas; names: a (132s in Av(123)), b (231s),
// d (321s), av123_231, layered, central_binomial, bonds_mean, bonds_variance
Rational exact_formula(const std::string& name, int n);
std::vector<std::string> exact_formula_names();

} // namespace permpat
