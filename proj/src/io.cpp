#include "kschur/io.hpp"

#include <stdexcept>

namespace kschur {

std::vector<int> parse_word(std::string_view text) {
    std::vector<int> word;
    if (text.empty()) return word;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        std::string token(text.substr(pos, next == std::string_view::npos ? next : next - pos));
        try {
            word.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw std::invalid_argument("word parse error at position " + std::to_string(pos));
        }
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return word;
}

CylindricShape parse_cylindric(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("cylindric shape must look like n,m:[a,b]");
    auto head = text.substr(0, colon);
    auto comma = head.find(',');
    if (comma == std::string_view::npos)
        throw std::invalid_argument("cylindric shape must look like n,m:[a,b]");
    int n = std::stoi(std::string(head.substr(0, comma)));
    int m = std::stoi(std::string(head.substr(comma + 1)));

    auto body = text.substr(colon + 1);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw std::invalid_argument("cylindric profile must be bracketed");
    std::vector<int> profile;
    std::string token;
    for (char ch : body.substr(1, body.size() - 2)) {
        if (ch == ',') {
            profile.push_back(std::stoi(token));
            token.clear();
        } else {
            token += ch;
        }
    }
    if (!token.empty()) profile.push_back(std::stoi(token));
    return CylindricShape(n, m, std::move(profile));
}

std::pair<int, int> parse_range(std::string_view text) {
    auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        int v = std::stoi(std::string(text));
        return {v, v};
    }
    int a = std::stoi(std::string(text.substr(0, dots)));
    int b = std::stoi(std::string(text.substr(dots + 2)));
    if (a > b) throw std::invalid_argument("empty range");
    return {a, b};
}

std::string rows_to_string(const std::vector<std::vector<int>>& rows) {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ',';
        out += '[';
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(rows[i][j]);
        }
        out += ']';
    }
    out += ']';
    return out;
}

nlohmann::json to_json(const MonExpansion& f) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [mu, c] : f.coeffs) coeffs[mu.to_string()] = c;
    return {{"degree", f.degree}, {"coeffs", coeffs}};
}

nlohmann::json to_json(const BasisCoeffs& bc) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [mu, c] : bc.coeffs) coeffs[mu.to_string()] = c;
    std::string name = bc.basis == Basis::schur ? "schur"
                       : bc.basis == Basis::dual_k_schur ? "dual-k-schur"
                                                         : "k-schur";
    nlohmann::json out = {{"basis", name}, {"coeffs", coeffs}};
    if (bc.basis != Basis::schur) out["k"] = bc.k;
    return out;
}

nlohmann::json to_json(const CoreConstruction& cc) {
    nlohmann::json residue_sets = nlohmann::json::array();
    for (const auto& r : row_residue_sets(cc)) residue_sets.push_back(r);
    return {{"core", cc.core.shape.to_string()},
            {"k", cc.core.k},
            {"shifts", cc.shifts},
            {"rho", cc.inner.to_string()},
            {"residue_sets", residue_sets}};
}

nlohmann::json to_json(const KTableau& t) {
    return {{"core", t.core.shape.to_string()},
            {"k", t.core.k},
            {"rows", t.rows},
            {"k_weight", t.k_weight}};
}

nlohmann::json to_json(const Support& s) {
    return {{"n", s.n}, {"points", s.points}};
}

}  // namespace kschur
