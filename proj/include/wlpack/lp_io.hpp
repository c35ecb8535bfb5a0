#pragma once

// Text format for LPs, one per file:
//
//   max 1 1 1          objective sense and coefficients
//   1 1 0 <= 1         constraint rows, all of the form  coeffs <= rhs
//   0 1/2 1 <= 3/4
//
// Coefficients are integers or fractions "p/q"; '#' starts a comment.

#include <wlpack/lp.hpp>

#include <sstream>
#include <string>

namespace wlpack {

inline RationalLP parse_lp_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    RationalLP lp;
    bool have_objective = false;
    int lineno = 0;

    while (std::getline(in, raw)) {
        lineno++;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        std::string tok;
        if (!(line >> tok)) continue;

        if (!have_objective) {
            if (tok == "max")
                lp.opt = Opt::max;
            else if (tok == "min")
                lp.opt = Opt::min;
            else
                throw std::invalid_argument("lp text line " + std::to_string(lineno) +
                                            ": expected 'max' or 'min'");
            std::string coeff;
            while (line >> coeff) lp.objective.push_back(parse_rational(coeff));
            have_objective = true;
            continue;
        }

        std::vector<std::string> toks{tok};
        while (line >> tok) toks.push_back(tok);
        if (toks.size() != lp.objective.size() + 2 || toks[lp.objective.size()] != "<=")
            throw std::invalid_argument("lp text line " + std::to_string(lineno) +
                                        ": expected  coeffs <= rhs");
        std::vector<Rational> coeffs;
        for (size_t j = 0; j < lp.objective.size(); j++) coeffs.push_back(parse_rational(toks[j]));
        lp.add_dense_row(coeffs, parse_rational(toks.back()));
    }
    if (!have_objective) throw std::invalid_argument("lp text: missing objective line");
    return lp;
}

inline std::string format_lp_text(const RationalLP& lp) {
    std::ostringstream out;
    out << (lp.opt == Opt::max ? "max" : "min");
    for (const auto& c : lp.objective) out << " " << to_string(c);
    out << "\n";
    for (int i = 0; i < lp.num_rows(); i++) {
        std::vector<Rational> dense(lp.num_vars(), Rational(0));
        for (const auto& e : lp.rows[i]) dense[e.col] = e.val;
        for (int j = 0; j < lp.num_vars(); j++) out << (j ? " " : "") << to_string(dense[j]);
        out << " <= " << to_string(lp.rhs[i]) << "\n";
    }
    return out.str();
}

}  // namespace wlpack
