#include "knotamp/statesum.hpp"

#include <future>

#include "knotamp/error.hpp"

namespace knotamp {

namespace {

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

template <class S>
class Sweep {
public:
    Sweep(const TangleModel<S>& m, int max_width) : m_(m), max_width_(max_width) {
        amps_.push_back(scalar_ops<S>::one());  // vacuum
    }

    void cup(int p) {
        const std::size_t n = m_.dim;
        grow_check(width_ + 2);
        const std::size_t right = ipow(n, width_ - p);
        const std::size_t left = amps_.size() / right;
        std::vector<S> next(amps_.size() * n * n, scalar_ops<S>::zero());
        // index = (l * n^2 + a*n + b) * right + r
        for (std::size_t l = 0; l < left; ++l)
            for (std::size_t r = 0; r < right; ++r) {
                const S& v = amps_[l * right + r];
                if (scalar_ops<S>::is_zero(v)) continue;
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b) {
                        const S& c = m_.cup.at(a, b);
                        if (scalar_ops<S>::is_zero(c)) continue;
                        next[(l * n * n + a * n + b) * right + r] = c * v;
                    }
            }
        amps_ = std::move(next);
        width_ += 2;
    }

    void cap(int p) {
        const std::size_t n = m_.dim;
        const std::size_t right = ipow(n, width_ - p - 2);
        const std::size_t left = amps_.size() / (right * n * n);
        std::vector<S> next(left * right, scalar_ops<S>::zero());
        for (std::size_t l = 0; l < left; ++l)
            for (std::size_t r = 0; r < right; ++r) {
                S acc = scalar_ops<S>::zero();
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b) {
                        const S& c = m_.cap.at(a, b);
                        if (scalar_ops<S>::is_zero(c)) continue;
                        acc = acc + c * amps_[(l * n * n + a * n + b) * right + r];
                    }
                next[l * right + r] = acc;
            }
        amps_ = std::move(next);
        width_ -= 2;
    }

    // state'_{cd} = sum_{ab} T^{ab}_{cd} state_{ab} on factors (p, p+1)
    void crossing(int p, const Tensor<S>& t) {
        const std::size_t n = m_.dim;
        const std::size_t right = ipow(n, width_ - p - 2);
        const std::size_t left = amps_.size() / (right * n * n);
        std::vector<S> in(n * n);
        for (std::size_t l = 0; l < left; ++l)
            for (std::size_t r = 0; r < right; ++r) {
                for (std::size_t k = 0; k < n * n; ++k) in[k] = amps_[(l * n * n + k) * right + r];
                for (std::size_t cd = 0; cd < n * n; ++cd) {
                    S acc = scalar_ops<S>::zero();
                    for (std::size_t ab = 0; ab < n * n; ++ab) {
                        const S& tv = t.at(ab, cd);
                        if (scalar_ops<S>::is_zero(tv)) continue;
                        acc = acc + tv * in[ab];
                    }
                    amps_[(l * n * n + cd) * right + r] = acc;
                }
            }
    }

    S result() const { return amps_[0]; }

private:
    void grow_check(int w) {
        if (w > max_width_)
            fail_pre("evaluate: slice width " + std::to_string(w) + " exceeds cap " +
                     std::to_string(max_width_));
    }

    const TangleModel<S>& m_;
    int max_width_;
    int width_ = 0;
    std::vector<S> amps_;
};

}  // namespace

template <class S>
S evaluate(const MorseDiagram& d, const TangleModel<S>& m, const EvalOptions& opt) {
    if (!is_closed(d)) fail_pre("evaluate: diagram must be closed (width 0 to width 0)");
    int cap_w = opt.max_width > 0 ? opt.max_width : (m.dim <= 2 ? 12 : 8);
    Sweep<S> sweep(m, cap_w);
    for (const auto& e : d.events) {
        switch (e.kind) {
            case EventKind::cup: sweep.cup(e.pos); break;
            case EventKind::cap: sweep.cap(e.pos); break;
            case EventKind::cross_pos: sweep.crossing(e.pos, m.r_pos); break;
            case EventKind::cross_neg: sweep.crossing(e.pos, m.r_neg); break;
            case EventKind::cross_virtual:
                if (!m.virtual_tensor)
                    fail_pre("evaluate: model '" + m.name + "' has no virtual tensor");
                sweep.crossing(e.pos, *m.virtual_tensor);
                break;
        }
    }
    return sweep.result();
}

template <class S>
S normalized(const MorseDiagram& d, const TangleModel<S>& m, const EvalOptions& opt) {
    if (m.normalization != Normalization::writhe_monomial || !m.curl_pos)
        fail_pre("normalized: model '" + m.name +
                 "' has no scalar curl factor; compare raw values at equal writhe instead");
    const int w = writhe(d);
    S z = evaluate(d, m, opt);
    if constexpr (scalar_ops<S>::exact) {
        return m.curl_pos->pow(-w) * z;
    } else {
        ComplexNum kappa = *m.curl_pos;
        ComplexNum acc{1.0, 0.0};
        for (int i = 0; i < std::abs(w); ++i) acc *= kappa;
        return w >= 0 ? z / acc : z * acc;
    }
}

template <class S>
std::vector<S> evaluate_batch(const std::vector<MorseDiagram>& ds, const TangleModel<S>& m,
                              int jobs, const EvalOptions& opt) {
    std::vector<S> out(ds.size(), scalar_ops<S>::zero());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < ds.size(); ++i) out[i] = evaluate(ds[i], m, opt);
        return out;
    }
    std::vector<std::future<void>> fs;
    std::size_t chunk = (ds.size() + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
        std::size_t lo = j * chunk, hi = std::min(ds.size(), lo + chunk);
        if (lo >= hi) break;
        fs.push_back(std::async(std::launch::async, [&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) out[i] = evaluate(ds[i], m, opt);
        }));
    }
    for (auto& f : fs) f.get();
    return out;
}

template LaurentPoly evaluate(const MorseDiagram&, const ExactModel&, const EvalOptions&);
template ComplexNum evaluate(const MorseDiagram&, const NumericModel&, const EvalOptions&);
template LaurentPoly normalized(const MorseDiagram&, const ExactModel&, const EvalOptions&);
template ComplexNum normalized(const MorseDiagram&, const NumericModel&, const EvalOptions&);
template std::vector<LaurentPoly> evaluate_batch(const std::vector<MorseDiagram>&,
                                                 const ExactModel&, int, const EvalOptions&);
template std::vector<ComplexNum> evaluate_batch(const std::vector<MorseDiagram>&,
                                                const NumericModel&, int, const EvalOptions&);

ClosedFormReport oriented_closed_form(const MorseDiagram& d, ClosedFormCase which) {
    DiagramStats st = analyze(d);
    ClosedFormReport r;
    r.which = which;
    r.seifert_circles = st.seifert_circles;
    r.writhe = st.writhe;
    r.positive = st.positive;
    r.negative = st.negative;
    if (which == ClosedFormCase::product) {
        r.exponent = static_cast<long>(st.seifert_circles) - st.writhe - 1;
        r.trivial = (r.exponent % 2 == 0);
    } else {
        r.exponent = static_cast<long>(st.writhe) + st.negative - st.positive;
        r.trivial = (r.exponent == 0);
    }
    return r;
}

}  // namespace knotamp
