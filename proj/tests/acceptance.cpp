#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "bmweights/verify.hpp"

/* Acceptance gate.
 *
 * Eight criteria, each a verification suite swept over a fixed grid of
 * field data, every check an exact integer identity.  One line per
 * criterion; nonzero exit if any fails.
 *
 *   full grid:       (3,1) (3,2) (5,1) (5,2), e = 1
 *   structure grid:  full grid plus (7,1) (3,3)
 */

namespace {

using namespace bmweights;

struct Fd {
    long long p;
    int f;
    int e = 1;
};

const std::vector<Fd> kFull = {{3, 1}, {3, 2}, {5, 1}, {5, 2}};
const std::vector<Fd> kStruct = {{3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}, {3, 3}};
const std::vector<Fd> kGalois = {{3, 1}, {3, 2}, {5, 1}, {5, 2}, {3, 1, 2}};
const std::vector<Fd> kOracle = {{3, 1}, {5, 1}};

class ContextPool {
  public:
    explicit ContextPool(int jobs) : jobs_(jobs) {}

    VerifyContext& at(const Fd& fd) {
        auto key = std::make_tuple(fd.p, fd.f, fd.e);
        auto it = pool_.find(key);
        if (it == pool_.end())
            it = pool_.emplace(key, std::make_unique<VerifyContext>(FieldDatum(fd.p, fd.f, fd.e),
                                                                    jobs_))
                     .first;
        return *it->second;
    }

  private:
    int jobs_;
    std::map<std::tuple<long long, int, int>, std::unique_ptr<VerifyContext>> pool_;
};

bool run_criterion(ContextPool& pool, int number, const std::string& suite,
                   const std::string& what, const std::vector<Fd>& grid) {
    long long checks = 0;
    std::vector<std::string> failures;
    for (const Fd& fd : grid) {
        SuiteReport r = pool.at(fd).run_suite(suite);
        checks += r.checks;
        failures.insert(failures.end(), r.failures.begin(), r.failures.end());
    }
    if (failures.empty()) {
        std::printf("criterion %d [%s]: PASS (%lld checks)\n", number, what.c_str(), checks);
        return true;
    }
    std::printf("criterion %d [%s]: FAIL (%zu of %lld checks failed)\n", number, what.c_str(),
                failures.size(), checks);
    std::size_t shown = failures.size() < 3 ? failures.size() : 3;
    for (std::size_t i = 0; i < shown; ++i)
        std::printf("    %s\n", failures[i].c_str());
    if (failures.size() > shown)
        std::printf("    ... and %zu more\n", failures.size() - shown);
    return false;
}

}  // namespace

int main() {
    unsigned hw = std::thread::hardware_concurrency();
    int jobs = hw == 0 ? 1 : static_cast<int>(hw > 8 ? 8 : hw);
    ContextPool pool(jobs);

    bool ok = true;
    ok &= run_criterion(pool, 1, "jh", "Jordan-Holder structure, structure grid", kStruct);
    ok &= run_criterion(pool, 2, "shapes", "shape admissibility, structure grid", kStruct);
    ok &= run_criterion(pool, 3, "solve", "integer inversion, full grid", kFull);
    ok &= run_criterion(pool, 4, "orth", "orthogonality with kernel perturbations, full grid",
                        kFull);
    ok &= run_criterion(pool, 5, "cycles", "Z-side cycle identities, full grid", kFull);
    ok &= run_criterion(pool, 6, "xside", "X-side cycle identities, full grid", kFull);
    ok &= run_criterion(pool, 7, "galois", "inertial datum matching, full grid plus e=2",
                        kGalois);
    ok &= run_criterion(pool, 8, "oracle", "exhaustive-search cross-checks, (3,1) and (5,1)",
                        kOracle);

    std::printf("acceptance: %s\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}
