#include "lteval/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "lteval/errors.hpp"

namespace lteval {

namespace {

void check_aligned(const TrackerRun& run, const SequenceTruth& truth) {
    if (run.frames.size() != truth.frames.size()) {
        throw AlignmentError("run '" + run.sequence_name + "' has " +
                             std::to_string(run.frames.size()) + " frames, sequence '" +
                             truth.name + "' has " + std::to_string(truth.frames.size()));
    }
}

bool survives(const FramePrediction& pred, double tau_theta) {
    return pred.region.has_value() && pred.score >= tau_theta;
}

} // namespace

double overlap(const std::optional<Box>& a, const std::optional<Box>& b) {
    if (!a.has_value() || !b.has_value()) {
        return 0.0;
    }
    const double ax2 = a->x + a->w;
    const double ay2 = a->y + a->h;
    const double bx2 = b->x + b->w;
    const double by2 = b->y + b->h;
    const double iw = std::min(ax2, bx2) - std::max(a->x, b->x);
    const double ih = std::min(ay2, by2) - std::max(a->y, b->y);
    if (iw <= 0.0 || ih <= 0.0) {
        return 0.0;
    }
    const double inter = iw * ih;
    // Areas from the same corner expressions as the intersection, so that
    // identical boxes yield exactly 1.
    const double area_a = (ax2 - a->x) * (ay2 - a->y);
    const double area_b = (bx2 - b->x) * (by2 - b->y);
    const double uni = area_a + area_b - inter;
    return uni > 0.0 ? inter / uni : 0.0;
}

double f_score(double pr, double re) {
    if (pr == re) {
        return pr;  // harmonic mean of equal values, kept exact
    }
    const double sum = pr + re;
    return sum > 0.0 ? 2.0 * pr * re / sum : 0.0;
}

PrRe pr_re_thresholded(const TrackerRun& run, const SequenceTruth& truth, double tau_theta,
                       double tau_omega) {
    check_aligned(run, truth);
    if (!(tau_omega >= 0.0 && tau_omega <= 1.0)) {
        throw std::invalid_argument("tau_omega must lie in [0,1]");
    }
    std::size_t n_p = 0;
    std::size_t n_g = 0;
    std::size_t matched = 0;
    for (std::size_t t = 1; t < truth.frames.size(); ++t) {
        const auto& gt = truth.frames[t].region;
        const auto& pred = run.frames[t];
        const bool alive = survives(pred, tau_theta);
        if (alive) {
            ++n_p;
        }
        if (gt.has_value()) {
            ++n_g;
        }
        // A match needs both regions; empty regions cannot satisfy any
        // overlap requirement, including tau_omega = 0.
        if (alive && gt.has_value() && overlap(pred.region, gt) >= tau_omega) {
            ++matched;
        }
    }
    PrRe out;
    out.pr = n_p > 0 ? static_cast<double>(matched) / static_cast<double>(n_p) : 0.0;
    out.re = n_g > 0 ? static_cast<double>(matched) / static_cast<double>(n_g) : 0.0;
    return out;
}

PrPoint pr_re_at(const TrackerRun& run, const SequenceTruth& truth, double tau_theta) {
    check_aligned(run, truth);
    std::size_t n_p = 0;
    std::size_t n_g = 0;
    // Frames outside either restricted set contribute zero overlap, so one
    // accumulator serves as both the precision and the recall numerator.
    double sum = 0.0;
    for (std::size_t t = 1; t < truth.frames.size(); ++t) {
        const auto& gt = truth.frames[t].region;
        const auto& pred = run.frames[t];
        const bool alive = survives(pred, tau_theta);
        if (alive) {
            ++n_p;
        }
        if (gt.has_value()) {
            ++n_g;
        }
        if (alive && gt.has_value()) {
            sum += overlap(pred.region, gt);
        }
    }
    PrPoint point;
    point.tau_theta = tau_theta;
    point.n_p = n_p;
    point.n_g = n_g;
    point.pr = n_p > 0 ? sum / static_cast<double>(n_p) : 0.0;
    point.re = n_g > 0 ? sum / static_cast<double>(n_g) : 0.0;
    point.f = f_score(point.pr, point.re);
    return point;
}

std::vector<double> threshold_axis(const std::vector<TrackerRun>& runs, std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("threshold axis needs at least 2 samples");
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& run : runs) {
        for (const auto& pred : run.frames) {
            if (pred.region.has_value()) {
                lo = std::min(lo, pred.score);
                hi = std::max(hi, pred.score);
            }
        }
    }
    if (!(lo <= hi)) {
        throw std::invalid_argument("no scored predictions in any run");
    }
    const double eps = 1e-9 * std::max({hi - lo, std::abs(lo), std::abs(hi), 1.0});
    lo -= eps;
    std::vector<double> axis(n);
    const double span = hi - lo;
    for (std::size_t k = 0; k < n; ++k) {
        axis[k] = lo + span * static_cast<double>(k) / static_cast<double>(n - 1);
    }
    axis.back() = hi;  // the top threshold retains exactly the max-score frames
    for (std::size_t k = 1; k < n; ++k) {
        if (!(axis[k - 1] < axis[k])) {
            throw std::invalid_argument("degenerate score range: threshold axis not strictly increasing");
        }
    }
    return axis;
}

PrCurve sequence_curve(const TrackerRun& run, const SequenceTruth& truth,
                       const std::vector<double>& axis) {
    if (axis.empty()) {
        throw std::invalid_argument("empty threshold axis");
    }
    for (std::size_t k = 1; k < axis.size(); ++k) {
        if (!(axis[k - 1] < axis[k])) {
            throw std::invalid_argument("threshold axis must be strictly increasing");
        }
    }
    PrCurve curve;
    curve.points.reserve(axis.size());
    for (double tau : axis) {
        curve.points.push_back(pr_re_at(run, truth, tau));
    }
    return curve;
}

PrCurve average_curves(const std::vector<PrCurve>& curves) {
    if (curves.empty()) {
        throw std::invalid_argument("no curves to average");
    }
    const auto& first = curves.front();
    for (const auto& curve : curves) {
        if (curve.size() != first.size()) {
            throw std::invalid_argument("curves sampled on different threshold axes");
        }
        for (std::size_t i = 0; i < curve.size(); ++i) {
            if (curve.points[i].tau_theta != first.points[i].tau_theta) {
                throw std::invalid_argument("curves sampled on different threshold axes");
            }
        }
    }
    const auto count = static_cast<double>(curves.size());
    PrCurve out;
    out.points.resize(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        double pr_sum = 0.0;
        double re_sum = 0.0;
        std::size_t n_p = 0;
        std::size_t n_g = 0;
        for (const auto& curve : curves) {
            pr_sum += curve.points[i].pr;
            re_sum += curve.points[i].re;
            n_p += curve.points[i].n_p;
            n_g += curve.points[i].n_g;
        }
        auto& point = out.points[i];
        point.tau_theta = first.points[i].tau_theta;
        point.pr = pr_sum / count;
        point.re = re_sum / count;
        point.f = f_score(point.pr, point.re);
        point.n_p = n_p;
        point.n_g = n_g;
    }
    return out;
}

MaxF max_f(const PrCurve& curve) {
    if (curve.empty()) {
        throw std::invalid_argument("empty curve");
    }
    const PrPoint* best = &curve.points.front();
    for (const auto& point : curve.points) {
        if (point.f > best->f) {
            best = &point;
        }
    }
    return {best->f, best->tau_theta};
}

} // namespace lteval
