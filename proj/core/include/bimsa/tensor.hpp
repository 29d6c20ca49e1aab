#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace bimsa {

// All dense values flow through rank-4 NCHW tensors of doubles; scalars are
// [1,1,1,1]. Desk-scale sizes make double the cheapest way to share one code
// path between training and the fp64 finite-difference checks.
struct Shape {
    int64_t n = 1, c = 1, h = 1, w = 1;

    int64_t numel() const { return n * c * h * w; }
    bool operator==(const Shape& o) const = default;
    std::string str() const;
};

class Tensor {
public:
    Tensor() = default;
    explicit Tensor(Shape s, double fill = 0.0)
        : shape_(s), data_(static_cast<size_t>(s.numel()), fill) {}
    Tensor(int64_t n, int64_t c, int64_t h, int64_t w, double fill = 0.0)
        : Tensor(Shape{n, c, h, w}, fill) {}

    static Tensor scalar(double v) {
        Tensor t(1, 1, 1, 1);
        t.data_[0] = v;
        return t;
    }

    const Shape& shape() const { return shape_; }
    int64_t numel() const { return shape_.numel(); }
    bool defined() const { return !data_.empty(); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
    double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

    int64_t index(int64_t n, int64_t c, int64_t h, int64_t w) const {
        return ((n * shape_.c + c) * shape_.h + h) * shape_.w + w;
    }
    double& at(int64_t n, int64_t c, int64_t h, int64_t w) {
        return data_[static_cast<size_t>(index(n, c, h, w))];
    }
    double at(int64_t n, int64_t c, int64_t h, int64_t w) const {
        return data_[static_cast<size_t>(index(n, c, h, w))];
    }

    void fill(double v);
    double min() const;
    double max() const;
    double sum() const;
    double abs_max() const;

private:
    Shape shape_;
    std::vector<double> data_;
};

// Max absolute elementwise difference; shapes must match.
double max_abs_diff(const Tensor& a, const Tensor& b);

} // namespace bimsa
