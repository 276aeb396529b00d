#include "fibaut/base.hpp"

#include "fibaut/errors.hpp"
#include "fibaut/golden.hpp"
#include "fibaut/logic/compiler.hpp"
#include "fibaut/logic/parser.hpp"
#include "fibaut/logic/script.hpp"
#include "fibaut/relations.hpp"
#include "fibaut/zeckendorf.hpp"

#include <algorithm>

namespace fibaut::arith {

namespace {

// Runs a 3-track automaton on (x, y, z) using precomputed digit strings.
class TripleRunner {
public:
    TripleRunner(const Dfa& a, std::uint64_t max_value) : a_(a)
    {
        digits_.reserve(max_value + 1);
        for (std::uint64_t v = 0; v <= max_value; ++v) {
            digits_.push_back(zeck::encode(v).digits());
        }
    }

    bool accepts(std::uint64_t x, std::uint64_t y, std::uint64_t z) const
    {
        const auto& dx = digits_[x];
        const auto& dy = digits_[y];
        const auto& dz = digits_[z];
        const std::size_t len = std::max({dx.size(), dy.size(), dz.size()});
        State q = a_.initial();
        for (std::size_t i = 0; i < len; ++i) {
            const Symbol s = (digit(dx, i, len) << 2) | (digit(dy, i, len) << 1) | digit(dz, i, len);
            q = a_.next(q, s);
        }
        return a_.is_final(q);
    }

private:
    static Symbol digit(const zeck::Digits& d, std::size_t i, std::size_t len)
    {
        const std::size_t pad = len - d.size();
        return i < pad ? 0 : d[i - pad];
    }

    const Dfa& a_;
    std::vector<zeck::Digits> digits_;
};

std::string triple(std::uint64_t x, std::uint64_t y, std::uint64_t z)
{
    return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

void require(bool ok, const std::string& check)
{
    if (!ok) {
        throw VerificationError("post-build check failed: " + check);
    }
}

}  // namespace

std::optional<std::string> check_adder_exhaustive(const Dfa& adder, std::uint64_t limit)
{
    if (adder.arity() != 3) {
        return "adder must have 3 tracks";
    }
    const TripleRunner run(adder, 2 * limit + 2);
    for (std::uint64_t x = 0; x <= limit; ++x) {
        for (std::uint64_t y = 0; y <= limit; ++y) {
            const std::uint64_t z = x + y;
            if (!run.accepts(x, y, z)) {
                return "rejects " + triple(x, y, z);
            }
            for (std::uint64_t d = 1; d <= 2; ++d) {
                if (run.accepts(x, y, z + d)) {
                    return "accepts " + triple(x, y, z + d);
                }
                if (z >= d && run.accepts(x, y, z - d)) {
                    return "accepts " + triple(x, y, z - d);
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_phin_exhaustive(const Dfa& phin, unsigned digits)
{
    if (phin.arity() != 2) {
        return "phin must have 2 tracks";
    }
    // n < F(digits+2) has at most `digits` digits; floor(n*phi) needs one more.
    const std::uint64_t n_limit = zeck::fibonacci64(digits + 2);
    std::vector<std::uint8_t> seen(n_limit, 0);
    for (const auto& pair : dfa::enumerate(phin, digits + 1)) {
        const std::uint64_t n = pair[0];
        const std::uint64_t x = pair[1];
        if (n >= n_limit) {
            continue;
        }
        if (x != golden::floor_phi(n)) {
            return "accepts (" + std::to_string(n) + "," + std::to_string(x) + ")";
        }
        if (seen[n]++) {
            return "two outputs for n = " + std::to_string(n);
        }
    }
    for (std::uint64_t n = 0; n < n_limit; ++n) {
        if (!seen[n]) {
            return "no output for n = " + std::to_string(n);
        }
    }
    return std::nullopt;
}

bool has_base(const logic::AutomatonStore& store)
{
    for (const char* name : {"valid", "eq", "lt", "add", "phin", "noverphi", "phi2n"}) {
        if (!store.contains(name)) {
            return false;
        }
    }
    return true;
}

BaseReport build_base(logic::AutomatonStore& store, const BaseConfig& config)
{
    BaseReport report;
    store.put("valid", {valid(), {"n"}});
    store.put("eq", {eq(), {"x", "y"}});
    store.put("lt", {lt(), {"x", "y"}});

    report.adder = learn::guess(learn::addition_oracle(), config.adder_prefix_bound, config.adder_depths);
    require(report.adder.stabilized, "adder guess stabilizes");
    if (auto bad = check_adder_exhaustive(report.adder.candidate, config.adder_exhaustive_limit)) {
        throw VerificationError("post-build check failed: adder agrees with addition: " + *bad);
    }
    report.checks.push_back("adder exhaustive to " + std::to_string(config.adder_exhaustive_limit));
    store.put("add", {report.adder.candidate, {"x", "y", "z"}});
    require(learn::verify_function("add", {0, 1}, {2}, store), "adder is a function of (x,y)");
    report.checks.push_back("adder functional");
    {
        logic::Compiler compiler(store);
        require(compiler.eval_closed(*logic::parse_formula("?msd_fib Ax,y,z x+y=z <=> y+x=z")),
                "adder is commutative");
    }
    report.checks.push_back("adder commutative");

    report.phin = learn::guess(learn::floor_phi_oracle(), config.phin_prefix_bound, config.phin_depths);
    require(report.phin.stabilized, "phin guess stabilizes");
    if (auto bad = check_phin_exhaustive(report.phin.candidate, config.phin_digits)) {
        throw VerificationError("post-build check failed: phin agrees with floor_phi: " + *bad);
    }
    report.checks.push_back("phin exhaustive to " + std::to_string(config.phin_digits) + " digits");
    store.put("phin", {report.phin.candidate, {"n", "x"}});
    require(learn::verify_function("phin", {0}, {1}, store), "phin is a function of n");
    report.checks.push_back("phin functional");

    logic::run_script("def noverphi \"?msd_fib Ey $phin(n,y) & y=x+n\":\n"
                      "def phi2n \"?msd_fib Ey $phin(n,y) & x=y+n\":\n",
                      store);
    require(learn::verify_function("noverphi", {0}, {1}, store), "noverphi is a function of n");
    require(learn::verify_function("phi2n", {0}, {1}, store), "phi2n is a function of n");
    report.checks.push_back("noverphi, phi2n functional");
    return report;
}

}  // namespace fibaut::arith
