#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "fanodelta/geometry.hpp"

namespace fano {

enum class CenterKind { QIExceptional, QIDegenerate, QINondegenerate, EI, IEI, None };
enum class Maximality { Yes, No, Unknown };

struct CenterClass {
    CenterKind kind = CenterKind::None;
    Maximality maximal = Maximality::No;
};

std::string to_string(CenterKind k);
std::string to_string(Maximality m);

CenterClass classify_qi(const WeightedPoly& p, int k);
CenterClass classify_iei(const WeightedPoly& p);

// Throws when the monomial degree differs from the family degree.
bool monomial_present(const WeightedPoly& p, const Exponent& monomial);

// Index of the coordinate vertex carrying this singularity type, if any.
std::optional<int> vertex_of(const Family& f, const QuotientSingularity& point);

enum class InvolutionType { QI, EI, IEI, None };

std::string to_string(InvolutionType t);

// Which birational involution, if any, is centered at a point of the basket.
InvolutionType involution_type(const Family& f, const QuotientSingularity& point);

CenterClass classify_point(const WeightedPoly& p, const QuotientSingularity& point);

// Case labels of the family's table for this point. Without a member, all labels of the row;
// with a member, the single applicable label, or "not-maximal" / "uncovered".
std::vector<std::string> case_select(const Family& f, const QuotientSingularity& point, const WeightedPoly* p);

// Human-readable condition of a table row, e.g. "ndgn, t^2w notin F".
std::string case_condition(int family_id, const std::string& point_type, const std::string& label);

// Lines "coeff e0 e1 e2 e3 e4", '#' starts a comment.
WeightedPoly load_poly(const Family& f, std::istream& in);

}  // namespace fano
