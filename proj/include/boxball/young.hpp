#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace boxball {

std::vector<std::int64_t> transpose_partition(const std::vector<std::int64_t>& part);
bool is_transpose_pair(const std::vector<std::int64_t>& lambda,
                       const std::vector<std::int64_t>& rho);

// Integer partition with both orientations kept: lambda holds the weakly
// decreasing column lengths (soliton lengths), rho the row lengths.
struct YoungDiagram {
    std::vector<std::int64_t> lambda;
    std::vector<std::int64_t> rho;

    static YoungDiagram from_columns(std::vector<std::int64_t> lambda);
    static YoungDiagram from_rows(std::vector<std::int64_t> rho);
    // Throws std::logic_error unless rho is the transpose of lambda.
    static YoungDiagram checked(std::vector<std::int64_t> lambda,
                                std::vector<std::int64_t> rho);

    std::int64_t cells() const;
    bool empty() const { return lambda.empty(); }

    std::string lambda_line() const;  // "λ=4,1,1" ("λ=" alone when empty)
    std::string rho_line() const;
    nlohmann::ordered_json to_json() const;

    bool operator==(const YoungDiagram&) const = default;
};

}  // namespace boxball
