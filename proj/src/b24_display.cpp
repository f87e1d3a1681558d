// Transcription of the printed B_{2,4} expansion, bracket by bracket.
// Products and parenthesised factors are expanded; nothing else is corrected.
// Brackets flagged `suspect` were marked before any comparison was run.

#include "bfc/harness.hpp"

namespace bfc {

const std::vector<PrintedBracket>& b24_schur_display() {
    static const std::vector<PrintedBracket> d = {
        {0, 0, {{"[]", "1"}, {"[1]", "S1"}, {"[2]", "S2"}}, false, ""},
        {1, 0, {{"[1]", "S1^2-S2"}, {"[2]", "S1^3-S1*S2"}}, false, ""},
        {2, 0, {{"[1]", "-S1^2+S2"}, {"[2]", "S2^2"}}, false, ""},
        {3, 0, {}, true, "no z^3 bracket is printed"},
        {0, 1, {{"[1]", "S1"}, {"[1,1]", "S2"}}, false, ""},
        {0, 2, {{"[1,1]", "-1"}, {"[2,2]", "S2"}}, false, ""},
        {0, 3, {{"[2,1]", "-1"}, {"[2,2]", "-S1"}}, true, "printed as w^3 and s_(2,1 lacks its closing parenthesis"},
        {1, 1, {{"[]", "1"}, {"[1,1]", "S1^2-S2"}, {"[2,1]", "S1*S2"}}, false, ""},
        {1, 2, {{"[1,1]", "1"}, {"[2,2]", "S1*S2"}}, false, ""},
        {1, 3, {{"[2]", "1"}, {"[2,2]", "-S1^2+S2"}}, false, ""},
        {2, 1, {{"[]", "S1"}, {"[2,1]", "S2^2"}}, false, ""},
        {2, 2, {{"[1]", "S1"}, {"[1,1]", "S1^2-S2"}}, false, ""},
        {2, 3, {{"[2]", "S1"}, {"[2,1]", "S1^2-S2"}}, true, "no operator between the two terms; read as a sum"},
        {3, 1, {{"[]", "S2"}, {"[1,1]", "-S2^2"}}, false, ""},
        {3, 2, {{"[1]", "S2"}, {"[1,1]", "S1*S2"}}, false, ""},
        {3, 3, {{"[2]", "S2"}, {"[2,1]", "S1*S2"}, {"[2,2]", "S2^2"}}, false, ""},
    };
    return d;
}

const std::vector<PrintedBracket>& b24_chern_display() {
    static const std::string h1 = "t1+t2";
    static const std::string h2 = "t1^2+t1*t2+t2^2";
    static const std::string e2 = "t1*t2";
    static const std::string s21 = "t1^2*t2+t1*t2^2";
    static const std::string s22 = "t1^2*t2^2";
    static const std::vector<PrintedBracket> d = {
        {0, 0, {{"1", "1"}, {h1, "c1"}, {h2, "c1^2-c2"}}, false, ""},
        {1, 0, {{h1, "c2"}, {h2, "c1^3-c1*c2"}}, false, "the first coefficient is typeset through an undefined macro, read as c2"},
        {2, 0, {{h1, "-c2"}, {h2, "c1^4-2*c1^2*c2+c2^4"}}, true, "c2^4 in a degree-4 coefficient"},
        {3, 0, {}, true, "no z^3 bracket is printed"},
        {0, 1, {{h1, "c1"}, {e2, "c1^2-c2"}}, false, ""},
        {0, 2, {{e2, "-1"}, {s22, "c1^2-c2"}}, false, ""},
        {0, 3, {{s21, "-1"}, {s22, "-c1"}}, false, ""},
        {1, 1, {{"1", "1"}, {e2, "c2"}, {s21, "c1^3-c1*c2"}}, false, ""},
        {1, 2, {{e2, "1"}, {s22, "c1^3-c1*c2"}}, false, ""},
        {1, 3, {{h2, "1"}, {s22, "-c2"}}, true, "a Schur polynomial s_2(t) left inside a w^-3 bracket of the t-expanded display"},
        {2, 1, {{"1", "c1"}, {s21, "c1^4+2*c1^2*c2+c2^2"}}, true, "middle sign of the squared coefficient"},
        {2, 2, {{h1, "c1"}, {e2, "c2"}}, false, ""},
        {2, 3, {{h2, "c1"}, {s21, "c2"}}, false, ""},
        {3, 1, {{"1", "c1^2-c2"}, {e2, "-c1^4+2*c1^2*c2-c2^2"}}, false, ""},
        {3, 2, {{h1, "c1^2-c2"}, {e2, "S1*S2"}}, true, "Segre product S1*S2 left in the Chern-variable display"},
        {3, 3, {{h2, "c1^2-c2"}, {s21, "c1^3-c1*c2"}, {s22, "c1^4-2*c1^2*c2+c2^2"}}, false, ""},
    };
    return d;
}

}  // namespace bfc
