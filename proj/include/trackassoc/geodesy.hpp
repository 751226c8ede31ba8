#pragma once

#include <algorithm>
#include <cmath>

namespace trackassoc {

// Geographic position in degrees. lat in [-90, 90], lon normalized to (-180, 180].
struct GeoPoint {
    double lat = 0.0;
    double lon = 0.0;
};

struct GeoConstants {
    double earth_radius_m = 6'371'000.0;  // mean sphere radius
};

constexpr double deg2rad(double d) { return d * (M_PI / 180.0); }
constexpr double rad2deg(double r) { return r * (180.0 / M_PI); }

// Reduce a longitude into (-180, 180].
inline double normalize_lon(double lon_deg) {
    double x = std::fmod(lon_deg, 360.0);
    if (x <= -180.0) x += 360.0;
    if (x > 180.0) x -= 360.0;
    return x;
}

// Reduce a course angle into [0, 360).
inline double normalize_course(double course_deg) {
    double x = std::fmod(course_deg, 360.0);
    if (x < 0.0) x += 360.0;
    return x;
}

inline bool is_valid(const GeoPoint& p) {
    return p.lat >= -90.0 && p.lat <= 90.0 && p.lon > -180.0 && p.lon <= 180.0;
}

// Great-circle distance in meters:
//   2r * asin(sqrt(sin^2(dphi/2) + cos(phi_a) cos(phi_b) sin^2(dlambda/2)))
// The sqrt argument is clamped against round-off so antipodal pairs stay finite.
inline double haversine_distance(const GeoPoint& a, const GeoPoint& b,
                                 const GeoConstants& c = {}) {
    const double phi_a = deg2rad(a.lat);
    const double phi_b = deg2rad(b.lat);
    const double s1 = std::sin(deg2rad(b.lat - a.lat) / 2.0);
    const double s2 = std::sin(deg2rad(b.lon - a.lon) / 2.0);
    const double h = s1 * s1 + std::cos(phi_a) * std::cos(phi_b) * s2 * s2;
    return 2.0 * c.earth_radius_m * std::asin(std::sqrt(std::clamp(h, 0.0, 1.0)));
}

// Circular separation of two course angles, in [0, 180] degrees.
// 0 and 360 are the same direction, so the gap never exceeds a half turn.
inline double course_gap(double theta_a_deg, double theta_b_deg) {
    double d = std::fmod(std::fabs(theta_a_deg - theta_b_deg), 360.0);
    return 180.0 - std::fabs(180.0 - d);
}

// Rate of direction change in degrees per second. The time difference is
// clamped to at least one second: AIS streams may carry several reports with
// the same timestamp and the rate must stay finite for them.
inline double angular_change_rate(double theta_now_deg, double theta_prev_deg,
                                  double t_now_s, double t_prev_s) {
    const double dt = std::max(std::fabs(t_now_s - t_prev_s), 1.0);
    return course_gap(theta_now_deg, theta_prev_deg) / dt;
}

// Direct geodesic problem on the sphere: where do we end up starting at
// `origin`, following the initial bearing for `distance_m` meters?
//   phi2    = asin(sin phi1 cos d + cos phi1 sin d cos theta)
//   lambda2 = lambda1 + atan2(sin theta sin d cos phi1, cos d - sin phi1 sin phi2)
// with d the angular distance (meters / radius).
inline GeoPoint destination_point(const GeoPoint& origin, double bearing_deg,
                                  double distance_m, const GeoConstants& c = {}) {
    const double delta = distance_m / c.earth_radius_m;
    const double phi1 = deg2rad(origin.lat);
    const double theta = deg2rad(bearing_deg);
    const double sin_d = std::sin(delta);
    const double cos_d = std::cos(delta);
    const double sin_phi2 = std::clamp(
        std::sin(phi1) * cos_d + std::cos(phi1) * sin_d * std::cos(theta), -1.0, 1.0);
    const double phi2 = std::asin(sin_phi2);
    const double lambda2 =
        deg2rad(origin.lon) +
        std::atan2(std::sin(theta) * sin_d * std::cos(phi1), cos_d - std::sin(phi1) * sin_phi2);
    return {rad2deg(phi2), normalize_lon(rad2deg(lambda2))};
}

// Distance covered between two reports, assuming the average of the two
// reported speeds over the elapsed time. Good approximation while the
// distance traveled stays small.
inline double estimated_travel_distance(double v_now_mps, double v_prev_mps,
                                        double t_now_s, double t_prev_s) {
    return 0.5 * (v_now_mps + v_prev_mps) * std::fabs(t_now_s - t_prev_s);
}

// Initial great-circle bearing from `from` towards `to`, in [0, 360).
inline double initial_bearing(const GeoPoint& from, const GeoPoint& to) {
    const double phi1 = deg2rad(from.lat);
    const double phi2 = deg2rad(to.lat);
    const double dl = deg2rad(to.lon - from.lon);
    const double y = std::sin(dl) * std::cos(phi2);
    const double x = std::cos(phi1) * std::sin(phi2) - std::sin(phi1) * std::cos(phi2) * std::cos(dl);
    return normalize_course(rad2deg(std::atan2(y, x)));
}

}  // namespace trackassoc
