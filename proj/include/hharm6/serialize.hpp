#pragma once

#include <hharm6/coeff.hpp>

#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hharm6 {

inline constexpr int kSchemaVersion = 1;

inline nlohmann::json coeff_to_json(const ExactCoeff& c) {
    return nlohmann::json{{"re_a", rat_to_string(c.re_a())},
                          {"re_b", rat_to_string(c.re_b())},
                          {"im_a", rat_to_string(c.im_a())},
                          {"im_b", rat_to_string(c.im_b())},
                          {"surd", c.surd().str()},
                          {"pi_half_power", c.pi_half_power()}};
}

inline ExactCoeff coeff_from_json(const nlohmann::json& j) {
    Int surd;
    if (j.at("surd").is_string())
        surd = Int(j.at("surd").get<std::string>());
    else
        surd = Int(j.at("surd").get<long long>());
    return ExactCoeff::make(rat_parse(j.at("re_a").get<std::string>()),
                            rat_parse(j.at("re_b").get<std::string>()),
                            rat_parse(j.at("im_a").get<std::string>()),
                            rat_parse(j.at("im_b").get<std::string>()), surd,
                            j.at("pi_half_power").get<int>());
}

/// Decimal rendering of an exact value at a requested precision (6..50 digits).
inline std::string coeff_to_decimal(const ExactCoeff& c, int digits) {
    auto [re, im] = c.to_float50();
    std::ostringstream os;
    os << std::setprecision(digits);
    if (im == 0) {
        os << re;
    } else if (re == 0) {
        os << im << "*i";
    } else {
        os << re << (im > 0 ? "+" : "-") << (im > 0 ? im : -im) << "*i";
    }
    return os.str();
}

/// RFC 4180 CSV field quoting.
inline std::string csv_quote(const std::string& field) {
    bool needs = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

inline void csv_row(std::ostream& os, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os << ',';
        os << csv_quote(fields[i]);
    }
    os << "\r\n";
}

} // namespace hharm6
