#include "boxball/young.hpp"

#include <numeric>
#include <stdexcept>

namespace boxball {

namespace {

void require_partition(const std::vector<std::int64_t>& part, const char* what) {
    for (std::size_t i = 0; i < part.size(); ++i) {
        if (part[i] <= 0) throw std::invalid_argument(std::string(what) + ": parts must be positive");
        if (i > 0 && part[i] > part[i - 1])
            throw std::invalid_argument(std::string(what) + ": parts must be weakly decreasing");
    }
}

std::string join(const std::vector<std::int64_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

std::vector<std::int64_t> transpose_partition(const std::vector<std::int64_t>& part) {
    std::vector<std::int64_t> out;
    if (part.empty()) return out;
    out.resize(static_cast<std::size_t>(part.front()), 0);
    for (const std::int64_t len : part)
        for (std::int64_t i = 0; i < len; ++i) ++out[static_cast<std::size_t>(i)];
    return out;
}

bool is_transpose_pair(const std::vector<std::int64_t>& lambda,
                       const std::vector<std::int64_t>& rho) {
    return transpose_partition(lambda) == rho;
}

YoungDiagram YoungDiagram::from_columns(std::vector<std::int64_t> lambda) {
    require_partition(lambda, "lambda");
    YoungDiagram d;
    d.rho = transpose_partition(lambda);
    d.lambda = std::move(lambda);
    return d;
}

YoungDiagram YoungDiagram::from_rows(std::vector<std::int64_t> rho) {
    require_partition(rho, "rho");
    YoungDiagram d;
    d.lambda = transpose_partition(rho);
    d.rho = std::move(rho);
    return d;
}

YoungDiagram YoungDiagram::checked(std::vector<std::int64_t> lambda,
                                   std::vector<std::int64_t> rho) {
    require_partition(lambda, "lambda");
    if (!is_transpose_pair(lambda, rho))
        throw std::logic_error("Young diagram invariant violation: rows are not the transpose "
                               "of columns (lambda=" + join(lambda) + " rho=" + join(rho) + ")");
    YoungDiagram d;
    d.lambda = std::move(lambda);
    d.rho = std::move(rho);
    return d;
}

std::int64_t YoungDiagram::cells() const {
    return std::accumulate(lambda.begin(), lambda.end(), std::int64_t{0});
}

std::string YoungDiagram::lambda_line() const { return "λ=" + join(lambda); }
std::string YoungDiagram::rho_line() const { return "ρ=" + join(rho); }

nlohmann::ordered_json YoungDiagram::to_json() const {
    return nlohmann::ordered_json{{"lambda", lambda}, {"rho", rho}};
}

}  // namespace boxball
