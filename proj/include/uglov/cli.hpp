#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "uglov/admissible.hpp"

namespace uglov {

enum class OutputFormat { json, text, dot };
enum class VerifyMode { forward, converse, corollary, propb, psi_nature };

struct RunConfig {
    Modulus e = Modulus::finite(3);
    Charge charge;
    int n = 0;
    OutputFormat format = OutputFormat::text;
    int workers = 1;
    std::optional<ContentWindow> window;

    CrystalParams params() const { return {e, charge}; }
};

/// Bad flags or inputs; maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Modulus parse_modulus(const std::string& text);  // integer >= 2 or "inf"
Charge parse_charge(const std::string& text);    // "s1,s2"
ContentWindow parse_window(const std::string& text);
OutputFormat parse_format(const std::string& text);
VerifyMode parse_verify_mode(const std::string& text);

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

int cmd_enumerate(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, VerifyMode mode, std::ostream& out);
/// what is one of natures, boundary, adm, psi:<s1,s2>.
int cmd_show(const RunConfig& cfg, const Bipartition& bp, const std::string& what, std::ostream& out);

/// Full command line front end; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace uglov
