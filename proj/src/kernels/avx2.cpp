#include "movegraph/kernels.hpp"

#include <cstddef>

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define MOVEGRAPH_HAVE_AVX2 1
#include <immintrin.h>
#endif

namespace mg::kernels {

#ifdef MOVEGRAPH_HAVE_AVX2
namespace {

#define MG_AVX2 __attribute__((target("avx2")))

MG_AVX2 inline __m256d load4(const int* p) {
    return _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p)));
}

MG_AVX2 inline void or_bits4(int bits, unsigned char* out) {
    for (int lane = 0; lane < 4; ++lane) {
        if (bits & (1 << lane)) {
            out[lane] = 1;
        }
    }
}

MG_AVX2 void strip_avx2(Seg s, int sensitivity, Coords xs, Coords ys, Mask out) {
    const std::size_t n = xs.size();
    const double axs = static_cast<double>(s.b.x) - s.a.x;
    const double ays = static_cast<double>(s.b.y) - s.a.y;
    const double len2s = axs * axs + ays * ays;
    const __m256d ax = _mm256_set1_pd(axs);
    const __m256d ay = _mm256_set1_pd(ays);
    const __m256d len2 = _mm256_set1_pd(len2s);
    const __m256d sax = _mm256_set1_pd(s.a.x);
    const __m256d say = _mm256_set1_pd(s.a.y);
    const __m256d sbx = _mm256_set1_pd(s.b.x);
    const __m256d sby = _mm256_set1_pd(s.b.y);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d limit = _mm256_set1_pd(static_cast<double>(sensitivity) * sensitivity);
    const __m256d degenerate = len2s == 0.0 ? _mm256_castsi256_pd(_mm256_set1_epi64x(-1)) : zero;

    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d x = load4(xs.data() + k);
        const __m256d y = load4(ys.data() + k);
        const __m256d px = _mm256_sub_pd(x, sax);
        const __m256d py = _mm256_sub_pd(y, say);
        const __m256d dot = _mm256_add_pd(_mm256_mul_pd(px, ax), _mm256_mul_pd(py, ay));

        const __m256d d2a = _mm256_add_pd(_mm256_mul_pd(px, px), _mm256_mul_pd(py, py));
        const __m256d qx = _mm256_sub_pd(x, sbx);
        const __m256d qy = _mm256_sub_pd(y, sby);
        const __m256d d2b = _mm256_add_pd(_mm256_mul_pd(qx, qx), _mm256_mul_pd(qy, qy));
        const __m256d cross = _mm256_sub_pd(_mm256_mul_pd(px, ay), _mm256_mul_pd(py, ax));
        const __m256d d2m = _mm256_div_pd(_mm256_mul_pd(cross, cross), len2);

        const __m256d near_a = _mm256_or_pd(degenerate, _mm256_cmp_pd(dot, zero, _CMP_LE_OQ));
        const __m256d past_b = _mm256_cmp_pd(dot, len2, _CMP_GE_OQ);
        __m256d d2 = _mm256_blendv_pd(d2m, d2b, past_b);
        d2 = _mm256_blendv_pd(d2, d2a, near_a);

        or_bits4(_mm256_movemask_pd(_mm256_cmp_pd(d2, limit, _CMP_LE_OQ)), out.data() + k);
    }
    if (k < n) {
        scalar().strip(s, sensitivity, xs.subspan(k), ys.subspan(k), out.subspan(k));
    }
}

MG_AVX2 void square_avx2(Pt center, int half, Coords xs, Coords ys, Mask out) {
    const std::size_t n = xs.size();
    const __m256i cx = _mm256_set1_epi32(center.x);
    const __m256i cy = _mm256_set1_epi32(center.y);
    const __m256i h = _mm256_set1_epi32(half);
    std::size_t k = 0;
    for (; k + 8 <= n; k += 8) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xs.data() + k));
        const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ys.data() + k));
        const __m256i dx = _mm256_abs_epi32(_mm256_sub_epi32(x, cx));
        const __m256i dy = _mm256_abs_epi32(_mm256_sub_epi32(y, cy));
        const __m256i outside = _mm256_cmpgt_epi32(_mm256_max_epi32(dx, dy), h);
        const int miss = _mm256_movemask_ps(_mm256_castsi256_ps(outside));
        for (int lane = 0; lane < 8; ++lane) {
            if (!(miss & (1 << lane))) {
                out[k + lane] = 1;
            }
        }
    }
    if (k < n) {
        scalar().square(center, half, xs.subspan(k), ys.subspan(k), out.subspan(k));
    }
}

MG_AVX2 void circle_avx2(Pt center, int radius, Coords xs, Coords ys, Mask out) {
    const std::size_t n = xs.size();
    const __m256d cx = _mm256_set1_pd(center.x);
    const __m256d cy = _mm256_set1_pd(center.y);
    const __m256d limit = _mm256_set1_pd(static_cast<double>(radius) * radius);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d dx = _mm256_sub_pd(load4(xs.data() + k), cx);
        const __m256d dy = _mm256_sub_pd(load4(ys.data() + k), cy);
        const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
        or_bits4(_mm256_movemask_pd(_mm256_cmp_pd(d2, limit, _CMP_LE_OQ)), out.data() + k);
    }
    if (k < n) {
        scalar().circle(center, radius, xs.subspan(k), ys.subspan(k), out.subspan(k));
    }
}

#undef MG_AVX2

}  // namespace

const Table* avx2() {
    static const bool supported = __builtin_cpu_supports("avx2");
    static const Table table{"avx2", &strip_avx2, &square_avx2, &circle_avx2};
    return supported ? &table : nullptr;
}

#else

const Table* avx2() { return nullptr; }

#endif

}  // namespace mg::kernels
