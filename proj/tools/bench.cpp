// Compares the serial reference kernels against the OpenMP versions on a
// large window and reports timings.  Results must agree exactly.

#include <chrono>
#include <cstdio>
#include <numeric>

#include "rootorbits/orbits.hpp"

using namespace rootorbits;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& f) {
    auto t0 = Clock::now();
    f();
    return seconds(t0, Clock::now());
}

} // namespace

int main(int argc, char** argv) {
    std::string label = argc > 1 ? argv[1] : "E8(1)";
    Int H = argc > 2 ? std::atoll(argv[2]) : 200;

    CartanData cd = builtin_system(label, 0, 0);
    AffineFrame fr = affine_frame(cd);
    std::vector<int> id(cd.n);
    std::iota(id.begin(), id.end(), 0);
    CoxeterWord c = make_coxeter(cd, id);

    std::printf("system %s, height window %lld\n", cd.label.c_str(), (long long)H);

    std::vector<IVec> serial_roots, parallel_roots;
    double t_enum_s = timed([&] { serial_roots = enumerate_real_roots(cd, H, Exec::Serial); });
    double t_enum_p = timed([&] { parallel_roots = enumerate_real_roots(cd, H, Exec::Parallel); });
    std::printf("enumerate_real_roots: %zu roots  serial %.3fs  parallel %.3fs  speedup %.2fx\n",
                serial_roots.size(), t_enum_s, t_enum_p, t_enum_s / t_enum_p);
    if (serial_roots != parallel_roots) {
        std::printf("MISMATCH between serial and parallel enumeration\n");
        return 1;
    }

    VerifyOptions opt;
    opt.H = H;
    VerifyReport rs, rp;
    opt.exec = Exec::Serial;
    double t_ver_s = timed([&] { rs = verify_theorem_aff(cd, fr, c, opt); });
    opt.exec = Exec::Parallel;
    double t_ver_p = timed([&] { rp = verify_theorem_aff(cd, fr, c, opt); });
    std::printf("verify_theorem_aff:   %zu checks  serial %.3fs  parallel %.3fs  speedup %.2fx\n",
                rs.checks.size(), t_ver_s, t_ver_p, t_ver_s / t_ver_p);

    bool same = rs.checks.size() == rp.checks.size();
    for (std::size_t i = 0; same && i < rs.checks.size(); ++i)
        same = rs.checks[i].name == rp.checks[i].name && rs.checks[i].pass == rp.checks[i].pass;
    if (!same) {
        std::printf("MISMATCH between serial and parallel verification\n");
        return 1;
    }
    std::printf("serial and parallel kernels agree; all checks %s\n",
                rs.all_pass() ? "pass" : "FAIL");
    return rs.all_pass() ? 0 : 1;
}
