#pragma once

#include "rootorbits/orbits.hpp"
#include "rootorbits/table1.hpp"

// vendor/json.hpp; key order is lexicographic, which keeps every
// serialization deterministic.
#include "json.hpp"

namespace rootorbits {

using Json = nlohmann::json;

Json to_json(const IVec& v);
Json to_json(const QVec& v);  // exact fraction strings
Json to_json(const std::vector<IVec>& vs);

Json word_to_json(const std::vector<int>& word);  // 1-based letters

Json to_json(const CartanData& cd);
Json to_json(const CartanData& cd, const AffineFrame& fr);
Json to_json(const GammaData& gd);
Json to_json(const DualFunctional& f);
Json to_json(const TransversalInf& tv);
Json to_json(const OrbitReport& rep);
Json to_json(const UpsilonData& ud);
Json to_json(const VerifyReport& rep);
Json to_json(const TableReport& rep);

// {"matrix": [[...]], "aff": optional 1-based int, "label": optional string}
struct MatrixInput {
    IMat matrix;
    std::optional<int> aff;  // 0-based after parsing
    std::string label;
};

MatrixInput parse_matrix_json(const std::string& text);

} // namespace rootorbits
