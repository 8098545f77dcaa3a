#pragma once

#include <map>
#include <string>

namespace framekit {

/// A named verdict with the computed constants and the inequality that was
/// checked. Certificates certify properties of the instance at hand; they do
/// not prove anything about the untruncated systems they shadow.
struct Certificate {
    enum class Verdict { pass, fail, inconclusive };

    std::string name;
    std::map<std::string, double> constants; // ordered, so reports are stable
    std::string inequality;                  // human-readable statement checked
    Verdict verdict = Verdict::inconclusive;
    std::string detail;                      // skip reasons, violating nodes, notes
    int truncation_size = 0;                 // number of translates the check saw

    bool passed() const { return verdict == Verdict::pass; }
    bool failed() const { return verdict == Verdict::fail; }
};

inline const char* to_string(Certificate::Verdict v) {
    switch (v) {
        case Certificate::Verdict::pass: return "pass";
        case Certificate::Verdict::fail: return "fail";
        default: return "inconclusive";
    }
}

} // namespace framekit
