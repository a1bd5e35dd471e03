#include "torsig/profile_io.hpp"

#include "torsig/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace torsig {

std::string profile_to_json(const SignatureProfile& profile) {
    nlohmann::ordered_json j;
    j["p"] = profile.p;
    j["q"] = profile.q;
    auto& breaks = j["breakpoints"] = nlohmann::ordered_json::array();
    for (const auto& b : profile.breakpoints) breaks.push_back(b.str());
    j["values"] = profile.values;
    return j.dump();
}

std::string profile_to_tsv(const SignatureProfile& profile) {
    std::ostringstream out;
    ExactRational left(0);
    for (std::size_t i = 0; i < profile.values.size(); ++i) {
        const ExactRational right = i < profile.breakpoints.size() ? profile.breakpoints[i] : ExactRational(1);
        out << left << '\t' << right << '\t' << profile.values[i] << '\n';
        left = right;
    }
    return out.str();
}

SignatureProfile profile_from_json(std::string_view text) {
    SignatureProfile profile;
    try {
        const auto j = nlohmann::json::parse(text);
        profile.p = j.at("p").get<std::int64_t>();
        profile.q = j.at("q").get<std::int64_t>();
        for (const auto& b : j.at("breakpoints")) {
            profile.breakpoints.push_back(ExactRational::parse(b.get<std::string>()));
        }
        profile.values = j.at("values").get<std::vector<std::int64_t>>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed profile JSON: ") + e.what());
    }
    if (profile.values.size() != profile.breakpoints.size() + 1) {
        throw InvalidArgument("profile JSON needs exactly one more value than breakpoints");
    }
    return profile;
}

} // namespace torsig
