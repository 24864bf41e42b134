#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qmaj/bijections.hpp"
#include "qmaj/partition.hpp"
#include "qmaj/permutation.hpp"
#include "qmaj/qpoly.hpp"

namespace qmaj {

/* Integer list in either parenthesized text "(3,1,5,2,4)" or JSON array
 * "[3,1,5,2,4]" form; bare comma-separated values are also accepted.
 * Malformed input throws std::invalid_argument. */
std::vector<int> parse_int_list(std::string_view text);

Permutation parse_permutation(std::string_view text);
Partition parse_partition(std::string_view text);

/* "(3,1,5,2,4)"; "()" for the empty sequence. */
std::string format_int_list(const std::vector<int>& values);

/* Human form: "1 + 2q + 2q^2 + q^3"; "0" for the zero polynomial. */
std::string format_qpoly(const QPoly& p);

/* Two-row array with aligned columns, mu over pi. */
std::string format_two_row(const LabeledPartition& lp);

}  // namespace qmaj
