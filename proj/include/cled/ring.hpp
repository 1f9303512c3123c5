#pragma once

#include <cstddef>
#include <vector>

namespace cled {

/// Fixed-depth history of scalar samples, indexed by lag.
/// hist[0] is the most recent pushed value, hist[1] the one before, etc.
/// Starts zero-filled, so lags before the first push read as 0.
class RingHistory {
public:
    explicit RingHistory(std::size_t depth = 1)
        : buf_(depth > 0 ? depth : 1, 0.0) {}

    void push(double v) {
        head_ = (head_ + buf_.size() - 1) % buf_.size();
        buf_[head_] = v;
    }

    double operator[](std::size_t lag) const {
        return buf_[(head_ + lag) % buf_.size()];
    }

    std::size_t depth() const { return buf_.size(); }

    void reset() { buf_.assign(buf_.size(), 0.0); head_ = 0; }

    /// Snapshot ordered most-recent-first (lag 0, 1, ...).
    std::vector<double> to_vector() const {
        std::vector<double> out(buf_.size());
        for (std::size_t i = 0; i < buf_.size(); ++i) out[i] = (*this)[i];
        return out;
    }

    static RingHistory from_vector(const std::vector<double>& most_recent_first) {
        RingHistory h(most_recent_first.size());
        for (auto it = most_recent_first.rbegin(); it != most_recent_first.rend(); ++it)
            h.push(*it);
        return h;
    }

private:
    std::vector<double> buf_;
    std::size_t head_ = 0;
};

} // namespace cled
