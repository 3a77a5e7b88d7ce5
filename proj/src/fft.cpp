#include "pdu/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace pdu::fft {

namespace {

// Plan creation in FFTW is not thread-safe; execution via the new-array
// interface is. Plans are cached per (size, direction) and created under a
// lock with FFTW_UNALIGNED so they can run on any caller buffer.
class PlanCache {
public:
    fftw_plan get(std::size_t n, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto key = std::make_pair(n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<cdouble> a(n), b(n);
        fftw_plan plan = fftw_plan_dft_1d(
            static_cast<int>(n), reinterpret_cast<fftw_complex*>(a.data()),
            reinterpret_cast<fftw_complex*>(b.data()), sign,
            FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!plan) throw std::runtime_error("fftw_plan_dft_1d failed");
        plans_.emplace(key, plan);
        return plan;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

std::vector<cdouble> run(const std::vector<cdouble>& in, int sign) {
    if (in.empty()) throw std::invalid_argument("fft: empty input");
    std::vector<cdouble> out(in.size());
    fftw_plan plan = cache().get(in.size(), sign);
    // new-array execution; input is not modified for out-of-place c2c
    fftw_execute_dft(plan,
                     reinterpret_cast<fftw_complex*>(const_cast<cdouble*>(in.data())),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

}  // namespace

std::vector<cdouble> forward(const std::vector<cdouble>& in) {
    return run(in, FFTW_FORWARD);
}

std::vector<cdouble> backward(const std::vector<cdouble>& in) {
    return run(in, FFTW_BACKWARD);
}

}  // namespace pdu::fft
