#include "plustrace/qform.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace plustrace {

i64 QuadForm::content() const {
    return std::gcd(std::gcd(a < 0 ? -a : a, b < 0 ? -b : b), c < 0 ? -c : c);
}

bool QuadForm::is_reduced() const {
    i64 ab = b < 0 ? -b : b;
    if (!(ab <= a && a <= c)) return false;
    if ((ab == a || a == c) && b < 0) return false;
    return true;
}

double CMPoint::im() const {
    return std::sqrt(double(abs_disc)) / double(im_den);
}

QuadForm reduce(QuadForm q) {
    if (!q.positive_definite()) throw domain_error("reduce: form not positive definite");
    while (true) {
        // translate b into (-a, a]
        if (q.b > q.a || q.b <= -q.a) {
            i64 t = q.b >= 0 ? (q.b + q.a - 1) / (2 * q.a) : -((-q.b + q.a) / (2 * q.a));
            // b - 2ta in (-a, a]
            q.c += t * t * q.a - t * q.b;
            q.b -= 2 * t * q.a;
        }
        if (q.a > q.c) {
            q = {q.c, -q.b, q.a};
            continue;
        }
        break;
    }
    if (q.b < 0 && (q.b == -q.a || q.a == q.c)) q.b = -q.b;
    return q;
}

std::vector<QuadForm> reduced_forms(i64 D) {
    if (D >= 0 || !is_discriminant(D)) throw domain_error("reduced_forms: D must be a negative discriminant");
    std::vector<QuadForm> out;
    for (i64 a = 1; 3 * a * a <= -D; ++a) {
        for (i64 b = -a + 1; b <= a; ++b) {
            i64 num = b * b - D;
            if (num % (4 * a) != 0) continue;
            i64 c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            out.push_back({a, b, c});
        }
    }
    return out;  // already ordered by (a, b)
}

i64 class_number(i64 D) {
    return (i64)reduced_forms(D).size();
}

i64 weighted_class_number_six(i64 D) {
    i64 six = 0;
    for (const auto& q : reduced_forms(D)) six += 6 / omega(q);
    return six;
}

int omega(const QuadForm& q) {
    QuadForm r = reduce(q);
    if (r.b == r.a && r.a == r.c) return 3;
    if (r.b == 0 && r.a == r.c) return 2;
    return 1;
}

int genus_char(i64 d, const QuadForm& q) {
    if (d == 1) return 1;
    i64 ad = d < 0 ? -d : d;
    if (std::gcd(q.content(), ad) > 1) return 0;
    // Scan rings max(|x|,|y|) = r for a represented value coprime to d;
    // order within a ring: x ascending, y descending.  The character is
    // independent of which admissible value is found.
    i64 bound = 2 * ad + 2;
    for (i64 r = 1; r <= bound; ++r) {
        for (i64 x = 0; x <= r; ++x) {
            for (i64 y = r; y >= -r; --y) {
                if (x != r && y != r && y != -r) continue;
                if (std::gcd(x, y < 0 ? -y : y) != 1) continue;
                i64 n = q.eval(x, y);
                if (std::gcd(n, ad) == 1) return kronecker(d, n);
            }
        }
    }
    throw std::logic_error("genus_char: no represented value coprime to d within scan bound");
}

CMPoint cm_point(const QuadForm& q) {
    if (!q.positive_definite()) throw domain_error("cm_point: form not positive definite");
    CMPoint p;
    i64 g = std::gcd(q.b < 0 ? -q.b : q.b, 2 * q.a);
    if (g == 0) g = 2 * q.a;
    p.re_num = -q.b / g;
    p.re_den = 2 * q.a / g;
    p.abs_disc = -q.disc();
    p.im_den = 2 * q.a;
    return p;
}

std::vector<QuadForm> forms_in_rectangle(i64 D, double Y) {
    if (D >= 0 || !is_discriminant(D)) throw domain_error("forms_in_rectangle: D must be a negative discriminant");
    if (Y <= 0) throw domain_error("forms_in_rectangle: Y must be positive");
    std::vector<QuadForm> out;
    // y > Y  <=>  a < sqrt(|D|) / (2Y)
    for (i64 a = 1; 4.0L * a * a * (long double)Y * (long double)Y < (long double)(-D); ++a) {
        for (i64 ab = 0; ab <= a; ++ab) {
            i64 num = ab * ab - D;
            if (num % (4 * a) != 0) continue;
            i64 c = num / (4 * a);
            out.push_back({a, ab, c});
            if (ab != 0 && ab != a) out.push_back({a, -ab, c});  // b = -a (x = 1/2) excluded
        }
    }
    return out;
}

}  // namespace plustrace
