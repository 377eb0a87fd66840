#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "mukai/mukai_vector.hpp"
#include "mukai/types.hpp"

namespace mukai {

// Text forms used by the command line: signed decimal integers, vectors as
// "r,d,a". parse_vector(v.str()) == v for every v. Parse failures throw
// std::invalid_argument naming the offending token.

inline Int parse_int(const std::string& token, const std::string& what) {
    std::string t = token;
    bool negative = false;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        negative = t[0] == '-';
        t = t.substr(1);
    }
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("cannot parse " + what + ": offending token '" + token + "'");
    Int value(t);
    return negative ? Int(-value) : value;
}

inline MukaiVector parse_vector(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3)
        throw std::invalid_argument("cannot parse vector '" + text +
                                    "': expected three comma-separated integers");
    return {parse_int(parts[0], "vector component in '" + text + "'"),
            parse_int(parts[1], "vector component in '" + text + "'"),
            parse_int(parts[2], "vector component in '" + text + "'")};
}

}  // namespace mukai
