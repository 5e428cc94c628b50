#
#    Unitest for `expansive` module
#    penrosewang authors (C) 2024.
#
import math
import unittest
from fractions import Fraction
import pytest
from test_data import TestData
from penrosewang import Qr5, PointV, DirectionV, ALPHA, GAMMA, V, VPRIME, F0, F1, PenroseConst, Window, WormFill, \
    CartwheelFill, PenroseTiling, DegenerateFrameError, CoverageGapError, StripRegion, make_params, dot, normal_form, \
    shifted_pair, grid_corner, materialize, audit_tiling, cartwheel_perturbation, direction_transform, \
    classify_direction, strip_extract, reconstruct_from_strip, find_filled_hexagons, read_worm_filling, \
    cartwheel_candidates, observed_cartwheel_signs, worm_flip_counterexample, non_expansive_slopes, patch_id, \
    corner_vertex, rotate_params, frame_rotation
from penrosewang.expansive import WORM_EXAMPLE, tiles_inside, index_patches, predicted_hexagon_sign


class DirectionTest(unittest.TestCase):
    """Unit test for the direction functions."""

    def test_non_expansive_slopes(self):
        """Unit test for non_expansive_slopes() function."""
        self.assertEqual(non_expansive_slopes(), [None, 0, GAMMA, -1, ALPHA], "test_non_expansive_slopes 1")

    def test_direction_transform(self):
        """Unit test for direction_transform() function."""
        for j in range(5):
            d = DirectionV.perpendicular_to(j)
            lattice = direction_transform(d, PenroseConst.FRAME_LATTICE)
            self.assertEqual(lattice.get_frame(), PenroseConst.FRAME_LATTICE, f"test_direction_transform {j}/1")
            self.assertEqual(direction_transform(lattice, PenroseConst.FRAME_TILING), d,
                             f"test_direction_transform {j}/2")
            self.assertEqual(lattice.get_tag(), j, f"test_direction_transform {j}/3")
        # The lattice axes are f1 and f0.
        self.assertEqual(direction_transform(DirectionV(PointV(1, 0), frame="lattice"), "tiling"),
                         DirectionV(F1), "test_direction_transform 4")
        self.assertEqual(direction_transform(DirectionV(F0), "lattice"), DirectionV.from_slope(None),
                         "test_direction_transform 5")

        # Test exceptions.
        with self.assertRaises(Exception) as cm:
            # Unknown frame.
            direction_transform(DirectionV(F0), "polar")
        self.assertEqual(type(cm.exception), ValueError, "test_direction_transform assert-1")

    def test_classify_direction(self):
        """Unit test for classify_direction() function."""
        for j in range(5):
            verdict = classify_direction(DirectionV.perpendicular_to(j))
            self.assertFalse(verdict.expansive, f"test_classify_direction {j}/1")
            self.assertEqual(verdict.family, j, f"test_classify_direction {j}/2")
        for j, slope in enumerate(non_expansive_slopes()):
            verdict = classify_direction(DirectionV.from_slope(slope))
            self.assertEqual(verdict.family, j, f"test_classify_direction {j}/3")
        test_data = [Qr5(1), Qr5(Fraction(1, 2)), Qr5(2), ALPHA + 2, -GAMMA, Qr5(0, 1)]
        for idx, slope in enumerate(test_data):
            verdict = classify_direction(DirectionV.from_slope(slope))
            self.assertTrue(verdict.expansive, f"test_classify_direction {idx}/4")
        self.assertTrue(classify_direction(DirectionV(PointV(1, 1))).expansive, "test_classify_direction 5")
        self.assertFalse(classify_direction(DirectionV(V[3] - V[2])).expansive, "test_classify_direction 6")


class StripTest(unittest.TestCase):
    """Unit test for StripRegion and Strip classes."""

    def test_strip_region(self):
        """Unit test for StripRegion methods."""
        region = StripRegion(DirectionV(V[0]), 2, 5)
        self.assertTrue(region.contains(PointV(5, 0)), "test_strip_region 1")
        self.assertTrue(region.contains(PointV()), "test_strip_region 2")
        self.assertFalse(region.contains(PointV(Fraction(51, 10), 0)), "test_strip_region 3")
        moved = region.translate(V[1])
        self.assertTrue(moved.contains(V[1]), "test_strip_region 5")
        self.assertEqual(moved.get_center(), V[1], "test_strip_region 6")
        grown = region.grow(1)
        self.assertEqual((grown.get_r(), grown.get_length()), (Qr5(3), Qr5(6)), "test_strip_region 7")
        xmin, ymin, xmax, ymax = region.get_bounds()
        self.assertAlmostEqual(xmax - xmin, 10.0, 9, "test_strip_region 8")
        self.assertAlmostEqual(ymax - ymin, 4.0, 9, "test_strip_region 9")
        # Lattice directions are stored in the tiling frame.
        region = StripRegion(DirectionV.from_slope(Qr5(1)), 1, 1)
        self.assertEqual(region.get_direction().get_frame(), PenroseConst.FRAME_TILING, "test_strip_region 10")

        # Test exceptions.
        for idx, (r, length) in enumerate(((0, 1), (1, 0), (-1, 3))):
            with self.assertRaises(Exception) as cm:
                # Non-positive size.
                StripRegion(DirectionV(V[0]), r, length)
            self.assertEqual(type(cm.exception), ValueError, f"test_strip_region assert-{idx}")

    def test_strip_extract(self):
        """Unit test for strip_extract() and tiles_inside() functions."""
        my_td = TestData()
        x = PenroseTiling(my_td.generic_params())
        d = my_td.generic_direction()
        strip = strip_extract(x, d, 3, 10)
        region = strip.get_region()
        self.assertTrue(strip.get_tiles(), "test_strip_extract 1")
        for t in strip.get_tiles():
            self.assertTrue(all(region.contains(v) for v in t.get_vertices()), "test_strip_extract 2")
        # Every tile of the tiling inside the strip is in the strip.
        tiles = materialize(x, Window.around(15))
        inside = [t for t in tiles if all(region.contains(v) for v in t.get_vertices())]
        self.assertEqual(set(inside), set(strip.get_tiles()), "test_strip_extract 3")
        self.assertEqual(set(tiles_inside(tiles, region)), set(inside), "test_strip_extract 4")
        self.assertEqual(strip, strip_extract(x, d, 3, 10), "test_strip_extract 5")
        self.assertEqual(strip.get_direction(), direction_transform(d, "tiling"), "test_strip_extract 6")

    def test_strip_of_cartwheel(self):
        """Unit test for strip_extract() crossing the half-worms of a cartwheel with its center outside."""
        u = make_params((0, 0, 0, 0, 0))
        x = PenroseTiling(u, CartwheelFill(0), shift=10 * V[1])
        strip = strip_extract(x, DirectionV(V[0]), 3, 12)
        self.assertTrue(strip.get_tiles(), "test_strip_of_cartwheel 1")
        self.assertTrue(audit_tiling(strip.get_tiles()).is_valid(), "test_strip_of_cartwheel 2")
        self.assertFalse(strip.get_region().contains(10 * V[1]), "test_strip_of_cartwheel 3")
        with self.assertRaises(Exception) as cm:
            # Worm filling of the half-worms.
            strip_extract(PenroseTiling(u, WormFill(1), shift=10 * V[1]), DirectionV(V[0]), 3, 12)
        self.assertEqual(type(cm.exception), ValueError, "test_strip_of_cartwheel assert-1")


class ReconstructionTest(unittest.TestCase):
    """Unit test for reconstruct_from_strip() function."""

    @staticmethod
    def find_index(u, vertex):
        """Returns the rhomb index of a tiling vertex ``d_n`` of the Wang patch corners."""
        c0 = math.floor(float(dot(V[0], vertex) + u[0]))
        c1 = math.floor(float(dot(V[1], vertex) + u[1]))
        for n0 in range(c0 - 3, c0 + 4):
            for n1 in range(c1 - 3, c1 + 4):
                if corner_vertex(u, (n0, n1)) == vertex:
                    return n0, n1
        return None

    def check_round_trip(self, u, d, label):
        """Reconstructs a tiling from a strip and checks the parameter arcs, the anchor and the shift."""
        strip = strip_extract(PenroseTiling(u), d, PenroseConst.DEFAULT_R1, 200)
        result = reconstruct_from_strip(strip)
        self.assertEqual(result.frame, frame_rotation(d), f"{label}/0")
        u = rotate_params(u, result.frame)
        n = self.find_index(u, result.anchor_vertex)
        self.assertIsNotNone(n, f"{label}/1")
        u2, u4 = shifted_pair(normal_form(u), n)
        self.assertTrue(result.u2.contains(u2), f"{label}/2")
        self.assertTrue(result.u4.contains(u4), f"{label}/3")
        self.assertLess(result.u2.get_length(), Fraction(1, 20), f"{label}/4")
        self.assertLess(result.u4.get_length(), Fraction(1, 20), f"{label}/5")
        self.assertEqual(result.tile_id, patch_id(u, n), f"{label}/6")
        bx, by = grid_corner(u, n).to_cartesian()
        self.assertLess(math.hypot(bx, by), float(PenroseConst.SHIFT_BOUND), f"{label}/7")
        self.assertLess(math.hypot(result.t0[0] - bx, result.t0[1] - by), 0.1, f"{label}/8")
        self.assertGreater(result.patches, 100, f"{label}/9")
        self.assertLess(result.n0_span[0], 0, f"{label}/10")
        self.assertGreater(result.n0_span[1], 0, f"{label}/11")
        return result

    def test_round_trip(self):
        """Unit test for reconstruct_from_strip() on random tilings and directions."""
        my_td = TestData()
        for idx in range(2):
            self.check_round_trip(my_td.generic_params(), my_td.generic_direction(), f"test_round_trip {idx}")
        self.check_round_trip(make_params(TestData.IRRATIONAL_U), DirectionV.from_slope(Qr5(Fraction(2, 3))),
                              "test_round_trip irrational")

    @pytest.mark.slow
    def test_round_trip_grid(self):
        """Unit test for reconstruct_from_strip() on 20 random tilings and 5 random directions each."""
        my_td = TestData(seed=20240229)
        for idx in range(20):
            u = my_td.generic_params()
            for k in range(5):
                self.check_round_trip(u, my_td.generic_direction(), f"test_round_trip_grid {idx}/{k}")

    def test_near_axis(self):
        """Unit test for reconstruct_from_strip() in a rotated frame for directions close to a lattice axis."""
        my_td = TestData()
        test_data = [DirectionV.from_slope(Qr5(Fraction(1, 50))), DirectionV.from_slope(Qr5(50)),
                     DirectionV.from_slope(Qr5(Fraction(-1, 60)))]
        for idx, d in enumerate(test_data):
            self.assertTrue(classify_direction(d).expansive, f"test_near_axis {idx}/1")
            self.assertNotEqual(frame_rotation(d), 0, f"test_near_axis {idx}/2")
            result = self.check_round_trip(my_td.generic_params(), d, f"test_near_axis {idx}")
            self.assertNotEqual(result.frame, 0, f"test_near_axis {idx}/3")

    def test_frame_rotation(self):
        """Unit test for frame_rotation(), StripRegion.rot72() and Strip.rot72() functions."""
        self.assertEqual(frame_rotation(DirectionV.from_slope(Qr5(1))), 0, "test_frame_rotation 1")
        self.assertEqual(frame_rotation(DirectionV.from_slope(Qr5(Fraction(1, 9)))), 0, "test_frame_rotation 2")
        for j in range(5):
            d = DirectionV.perpendicular_to(j)
            steps = frame_rotation(d)
            self.assertEqual(steps != 0, j in (0, 1), f"test_frame_rotation 3/{j}")
            # The rotated direction is transverse to v0 and v1.
            region = StripRegion(d, 2, 5).rot72(steps)
            g = region.get_direction().get_generator()
            self.assertTrue(dot(g, V[0]) and dot(g, V[1]), f"test_frame_rotation 4/{j}")
        my_td = TestData()
        strip = strip_extract(PenroseTiling(my_td.generic_params()), DirectionV.perpendicular_to(0), 2, 5)
        rotated = strip.rot72(2)
        self.assertEqual(len(rotated.get_tiles()), len(strip.get_tiles()), "test_frame_rotation 5")
        self.assertTrue(all(rotated.get_region().contains(v) for t in rotated.get_tiles() for v in t.get_vertices()),
                        "test_frame_rotation 6")
        self.assertEqual(rotated.rot72(3), strip, "test_frame_rotation 7")

    def test_index_patches(self):
        """Unit test for index_patches() function."""
        my_td = TestData()
        u = my_td.generic_params()
        tiles = materialize(PenroseTiling(u), Window.around(6))
        positions, right, up = index_patches(tiles)
        self.assertGreater(len(positions), 10, "test_index_patches 1")
        # Relative indices are the differences of the rhomb indices.
        base = next(iter(positions))
        n_base = self.find_index(u, base.get_anchor() + VPRIME[0] + VPRIME[1])
        for c, (n0, n1) in positions.items():
            n = self.find_index(u, c.get_anchor() + VPRIME[0] + VPRIME[1])
            self.assertEqual((n[0] - n_base[0], n[1] - n_base[1]), (n0 - positions[base][0], n1 - positions[base][1]),
                             "test_index_patches 2")
        self.assertTrue(any(right[c] is not None and up[c] is not None for c in positions), "test_index_patches 3")

    def test_errors(self):
        """Unit test for the errors of reconstruct_from_strip() function."""
        my_td = TestData()
        x = PenroseTiling(my_td.generic_params())
        with self.assertRaises(Exception) as cm:
            # Direction perpendicular to v0.
            reconstruct_from_strip(strip_extract(x, DirectionV.perpendicular_to(0), 2, 5))
        self.assertEqual(type(cm.exception), DegenerateFrameError, "test_errors assert-1")
        with self.assertRaises(Exception) as cm:
            # Vertical lattice direction.
            reconstruct_from_strip(strip_extract(x, DirectionV.from_slope(None), 2, 5))
        self.assertEqual(type(cm.exception), DegenerateFrameError, "test_errors assert-2")
        with self.assertRaises(Exception) as cm:
            # No complete patch.
            reconstruct_from_strip(strip_extract(x, my_td.generic_direction(), Fraction(1, 2), Fraction(1, 2)))
        self.assertEqual(type(cm.exception), CoverageGapError, "test_errors assert-3")
        self.assertTrue(issubclass(DegenerateFrameError, ValueError), "test_errors 4")


class FillingReadTest(unittest.TestCase):
    """Unit test for reading the fillings from the tiles."""

    def test_find_filled_hexagons(self):
        """Unit test for find_filled_hexagons() and read_worm_filling() functions."""
        u = make_params(WORM_EXAMPLE)
        window = Window.around(4)
        for sign in (1, -1):
            tiles = materialize(PenroseTiling(u, WormFill(sign)), window)
            hexagons = find_filled_hexagons(tiles, 3)
            self.assertTrue(hexagons, f"test_find_filled_hexagons {sign}/1")
            for h in hexagons:
                self.assertEqual(h.families[0], 3, f"test_find_filled_hexagons {sign}/2")
                self.assertEqual(len(h.tiles), 3, f"test_find_filled_hexagons {sign}/3")
            reading = read_worm_filling(tiles, 3, 0)
            self.assertEqual(reading.filling, WormFill(sign), f"test_find_filled_hexagons {sign}/4")
            self.assertGreater(reading.hexagons, 0, f"test_find_filled_hexagons {sign}/5")

        # Test exceptions.
        with self.assertRaises(Exception) as cm:
            # No hexagon.
            read_worm_filling([], 3, 0)
        self.assertEqual(type(cm.exception), RuntimeError, "test_find_filled_hexagons assert-1")

    def test_worm_in_strip(self):
        """Unit test for read_worm_filling() on the strip of a worm tiling."""
        u = make_params(WORM_EXAMPLE)
        d = DirectionV(PointV(1, 1))
        self.assertTrue(classify_direction(d).expansive, "test_worm_in_strip 1")
        for sign in (1, -1):
            strip = strip_extract(PenroseTiling(u, WormFill(sign)), d, 3, 6)
            reading = read_worm_filling(strip.get_tiles(), 3, 0)
            self.assertEqual(reading.filling, WormFill(sign), f"test_worm_in_strip {sign}/2")

    def test_cartwheel_candidates(self):
        """Unit test for cartwheel_candidates() and observed_cartwheel_signs() functions."""
        u = make_params((0, 0, 0, 0, 0))
        for k in range(10):
            tiles = materialize(PenroseTiling(u, CartwheelFill(k)), Window.around(2))
            self.assertTrue(audit_tiling(tiles).is_valid(), f"test_cartwheel_candidates {k}/1")
            observed = observed_cartwheel_signs(tiles)
            self.assertTrue(observed, f"test_cartwheel_candidates {k}/2")
            self.assertIn(k, cartwheel_candidates(observed), f"test_cartwheel_candidates {k}/3")
            # The opposite perturbation flips every hexagon.
            w = tuple(-x for x in cartwheel_perturbation(k))
            for families, sign in observed.items():
                self.assertEqual(predicted_hexagon_sign(w, families), -sign, f"test_cartwheel_candidates {k}/4")
        self.assertEqual(cartwheel_candidates({}), list(range(10)), "test_cartwheel_candidates 5")


class WormFlipTest(unittest.TestCase):
    """Unit test for worm_flip_counterexample() function."""

    def test_worm_flip(self):
        """Unit test for worm_flip_counterexample() for all five families."""
        for j in range(5):
            audit = worm_flip_counterexample(j, 10, 60)
            self.assertEqual(audit.family, j, f"test_worm_flip {j}/1")
            self.assertTrue(audit.strips_equal, f"test_worm_flip {j}/2")
            self.assertTrue(audit.tilings_differ, f"test_worm_flip {j}/3")
            self.assertGreater(audit.strip_tiles, 1000, f"test_worm_flip {j}/4")
            self.assertGreater(audit.differing_tiles, 0, f"test_worm_flip {j}/5")
            self.assertLess(audit.max_spine_distance, audit.r, f"test_worm_flip {j}/6")
            self.assertNotEqual(audit.plus, audit.minus, f"test_worm_flip {j}/7")

        # Test exceptions.
        for idx, (j, r) in enumerate(((5, 10), (0, 0))):
            with self.assertRaises(Exception) as cm:
                # Invalid family or size.
                worm_flip_counterexample(j, r)
            self.assertEqual(type(cm.exception), ValueError, f"test_worm_flip assert-{idx}")


if __name__ == "__main__":
    unittest.main()

# End
