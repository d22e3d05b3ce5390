#include "qmat/json_io.hpp"

namespace qmat {

namespace {

nlohmann::json bigint_to_json(const BigInt& v) {
    if (v.fits_slong_p()) return static_cast<int64_t>(v.get_si());
    return v.get_str();
}

nlohmann::json poly_to_json(const ZPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(bigint_to_json(c));
    return arr;
}

} // namespace

nlohmann::json element_to_json(const NormalElement& e) {
    nlohmann::json arr = nlohmann::json::array();
    const auto& terms = e.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        nlohmann::json mono = nlohmann::json::array();
        for (const auto& [g, k] : it->first.factors())
            mono.push_back({gen_row(e.n(), g), gen_col(e.n(), g), k});
        arr.push_back({{"coeff", {{"num", poly_to_json(it->second.num())},
                                  {"den", poly_to_json(it->second.den())}}},
                       {"mono", mono}});
    }
    return arr;
}

nlohmann::json report_to_json(const CentralizerReport& r) {
    nlohmann::json j = {{"n", r.n},
                        {"d", r.d},
                        {"slice_dim", r.slice_dim},
                        {"kernel_dim", r.kernel_dim},
                        {"partition_count", r.partition_count},
                        {"sigma_rank", r.sigma_rank},
                        {"pass", r.pass}};
    if (!r.pass) j["failed_check"] = r.failed_check;
    return j;
}

} // namespace qmat
