#
#    Unitest for `duality` module
#    penrosewang authors (C) 2024.
#
import unittest
from fractions import Fraction
from test_data import TestData
from penrosewang import PointV, ZERO, V, VPRIME, PenroseConst, Window, RhombTile, WormFill, CartwheelFill, \
    PenroseTiling, make_params, rotate_params, crossings_in_window, dual_vertex, dual_patch, cartwheel_pattern, \
    cartwheel_perturbation, worm_perturbation, materialize, audit_tiling, same_tiles
from penrosewang.duality import hexagon_type, dual_polygon


class DualVertexTest(unittest.TestCase):
    """Unit test for dual_vertex() function."""

    def test_dual_vertex(self):
        """Unit test for dual_vertex() function."""
        zero = make_params((0, 0, 0, 0, 0))
        self.assertTrue(dual_vertex((0, 0, 0, 0, 0), zero).is_zero(), "test_dual_vertex 1")
        self.assertEqual(dual_vertex((0, -1, 0, 0, 0), zero), -VPRIME[1], "test_dual_vertex 2")
        # The all-ones vector is in the kernel.
        self.assertTrue(dual_vertex((1, 1, 1, 1, 1), zero).is_zero(), "test_dual_vertex 3")
        my_td = TestData()
        u = my_td.generic_params()
        m = (3, -2, 5, 0, 1)
        for j in range(5):
            n = list(m)
            n[j] += 1
            self.assertEqual(dual_vertex(n, u) - dual_vertex(m, u), VPRIME[j], f"test_dual_vertex 4/{j}")
        # A positive offset moves the vertex against its grid vector.
        shifted = make_params((Fraction(1, 5), 0, 0, 0, Fraction(-1, 5)))
        self.assertEqual(dual_vertex((0, 0, 0, 0, 0), shifted), (VPRIME[4] - VPRIME[0]) * Fraction(1, 5),
                         "test_dual_vertex 5")


class RhombTileTest(unittest.TestCase):
    """Unit test for RhombTile class."""

    def test_rhomb_tile(self):
        """Unit test for RhombTile methods."""
        test_data = [((0, 1), True), ((0, 2), False), ((0, 3), False), ((0, 4), True), ((1, 2), True),
                     ((1, 3), False), ((2, 4), False), ((3, 4), True)]
        for idx, (family, thick) in enumerate(test_data):
            t = RhombTile(family, PointV(1, 2))
            self.assertEqual(t.is_thick(), thick, f"test_rhomb_tile {idx}/1")
            self.assertEqual(sum(t.get_angles()), 10, f"test_rhomb_tile {idx}/2")
            xs = t.get_cartesian_vertices()
            ccw = [v.to_cartesian() for v in t.get_ccw_vertices()]
            area = sum(ccw[i][0] * ccw[(i + 1) % 4][1] - ccw[(i + 1) % 4][0] * ccw[i][1] for i in range(4))
            self.assertGreater(area, 0, f"test_rhomb_tile {idx}/3")
            self.assertEqual(len(xs), 4, f"test_rhomb_tile {idx}/4")
            i, j = family
            self.assertEqual(t.other_family(i), j, f"test_rhomb_tile {idx}/5")
            self.assertEqual(t.get_edge_starts(i), (PointV(1, 2), PointV(1, 2) + VPRIME[j]),
                             f"test_rhomb_tile {idx}/6")
            self.assertEqual(t.translate(V[0]).get_anchor(), PointV(2, 2), f"test_rhomb_tile {idx}/7")
        # Equality ignores the origin.
        self.assertEqual(RhombTile((0, 1), PointV()), RhombTile((0, 1), PointV(), PenroseConst.ORIGIN_WORMFILL),
                         "test_rhomb_tile 8")
        self.assertNotEqual(RhombTile((0, 1), PointV()), RhombTile((0, 2), PointV()), "test_rhomb_tile 9")

        # Test exceptions.
        with self.assertRaises(Exception) as cm:
            # Same family twice.
            RhombTile((1, 1), PointV())
        self.assertEqual(type(cm.exception), ValueError, "test_rhomb_tile assert-1")
        with self.assertRaises(Exception) as cm:
            # Reversed family order.
            RhombTile((3, 1), PointV())
        self.assertEqual(type(cm.exception), ValueError, "test_rhomb_tile assert-2")
        with self.assertRaises(Exception) as cm:
            # Family not in the tile.
            RhombTile((0, 1), PointV()).other_family(2)
        self.assertEqual(type(cm.exception), ValueError, "test_rhomb_tile assert-3")


class FillingTest(unittest.TestCase):
    """Unit test for the filling functions."""

    def test_cartwheel_pattern(self):
        """Unit test for cartwheel_pattern() and cartwheel_perturbation() functions."""
        self.assertEqual(cartwheel_pattern(0), (-1, 1, -1, -1, 1), "test_cartwheel_pattern 1")
        self.assertEqual(cartwheel_pattern(1), (-1, 1, -1, 1, 1), "test_cartwheel_pattern 2")
        patterns = [cartwheel_pattern(k) for k in range(10)]
        self.assertEqual(len(set(patterns)), 10, "test_cartwheel_pattern 3")
        for k in range(5):
            self.assertEqual(patterns[k + 5], tuple(-s for s in patterns[k]), f"test_cartwheel_pattern 4/{k}")
        for k in range(10):
            w = cartwheel_perturbation(k)
            self.assertEqual(tuple(x.sign() for x in w), patterns[k], f"test_cartwheel_pattern 5/{k}")

        # Test exceptions.
        for idx, k in enumerate((-1, 10, 2.0)):
            with self.assertRaises(Exception) as cm:
                # Invalid index.
                cartwheel_pattern(k)
            self.assertEqual(type(cm.exception), ValueError, f"test_cartwheel_pattern assert-{idx}")

    def test_worm_perturbation(self):
        """Unit test for worm_perturbation() and hexagon_type() functions."""
        self.assertEqual(worm_perturbation(2, 1), (ZERO, ZERO, 1, ZERO, ZERO), "test_worm_perturbation 1")
        self.assertEqual(worm_perturbation(0, -1)[0], -1, "test_worm_perturbation 2")
        self.assertEqual(hexagon_type((0, 1, 4)), "wide", "test_worm_perturbation 3")
        self.assertEqual(hexagon_type((1, 2, 3)), "wide", "test_worm_perturbation 4")
        self.assertEqual(hexagon_type((0, 2, 3)), "narrow", "test_worm_perturbation 5")
        self.assertEqual(hexagon_type((0, 1, 3)), "narrow", "test_worm_perturbation 6")

        # Test exceptions.
        with self.assertRaises(Exception) as cm:
            # Zero sign.
            worm_perturbation(1, 0)
        self.assertEqual(type(cm.exception), ValueError, "test_worm_perturbation assert-1")


class MaterializeTest(unittest.TestCase):
    """Unit test for PenroseTiling class and materialize() function."""

    def test_nonsingular(self):
        """Unit test for materialize() with nonsingular parameters."""
        my_td = TestData()
        window = Window.around(4)
        for idx in range(3):
            u = my_td.generic_params()
            tiles = materialize(PenroseTiling(u), window)
            crossings = crossings_in_window(u, window)
            self.assertEqual(len(tiles), len(crossings), f"test_nonsingular {idx}/1")
            self.assertTrue(all(t.get_origin() == PenroseConst.ORIGIN_DUAL for t in tiles),
                            f"test_nonsingular {idx}/2")
            audit = audit_tiling(tiles)
            self.assertTrue(audit.is_valid(), f"test_nonsingular {idx}/3")
            self.assertGreater(audit.interior_vertices, 10, f"test_nonsingular {idx}/4")
            # The vertices of a tile are the dual vertices of the cells around the crossing.
            c = crossings[len(crossings) // 2]
            polygon = dual_polygon(c)
            self.assertEqual(polygon.kind, PenroseConst.POLY_RHOMB, f"test_nonsingular {idx}/5")
            self.assertEqual(set(polygon.vertices), set(polygon.rhomb.get_vertices()), f"test_nonsingular {idx}/6")
            # Filling is ignored without singular crossings.
            self.assertTrue(same_tiles(tiles, materialize(PenroseTiling(u, WormFill(1)), window)),
                            f"test_nonsingular {idx}/7")

    def test_shift(self):
        """Unit test for the translation of a tiling."""
        my_td = TestData()
        u = my_td.generic_params()
        t = 3 * V[1] - V[3]
        tiles = materialize(PenroseTiling(u), Window.around(3))
        moved = materialize(PenroseTiling(u, shift=t), Window.around(3, t))
        self.assertTrue(same_tiles(moved, [x.translate(t) for x in tiles]), "test_shift 1")
        self.assertFalse(same_tiles(moved, tiles), "test_shift 2")

    def test_rotation(self):
        """Unit test for RhombTile.rot72() on a rotated tiling."""
        u = make_params(TestData.IRRATIONAL_U)
        tiles = materialize(PenroseTiling(u), Window.around(2))
        for steps in (1, 3):
            rotated = set(materialize(PenroseTiling(rotate_params(u, steps)), Window.around(6)))
            self.assertTrue({t.rot72(steps) for t in tiles} <= rotated, f"test_rotation {steps}/1")
        t = tiles[0]
        self.assertEqual(t.rot72(5), t, "test_rotation 2")
        self.assertEqual(set(t.rot72(2).get_vertices()), {v.rot72().rot72() for v in t.get_vertices()},
                         "test_rotation 3")

    def test_cartwheel(self):
        """Unit test for materialize() with a cartwheel."""
        u = make_params((0, 0, 0, 0, 0))
        window = Window.around(3)
        polygons = dual_patch(u, window)
        self.assertEqual(sum(1 for p in polygons if p.kind == PenroseConst.POLY_DECAGON), 1, "test_cartwheel 1")
        self.assertTrue(any(p.kind == PenroseConst.POLY_HEXAGON for p in polygons), "test_cartwheel 2")
        fillings = []
        for k in range(10):
            tiles = PenroseTiling(u, CartwheelFill(k)).materialize(window)
            self.assertTrue(audit_tiling(tiles).is_valid(), f"test_cartwheel 3/{k}")
            near = frozenset(t for t in tiles if t.get_origin() == PenroseConst.ORIGIN_CARTWHEELFILL)
            self.assertGreaterEqual(len(near), 10, f"test_cartwheel 4/{k}")
            fillings.append(frozenset(tiles))
        self.assertEqual(len(set(fillings)), 10, "test_cartwheel 5")

        # Test exceptions.
        with self.assertRaises(Exception) as cm:
            # No filling.
            materialize(PenroseTiling(u), window)
        self.assertEqual(type(cm.exception), ValueError, "test_cartwheel assert-1")
        with self.assertRaises(Exception) as cm:
            # Worm filling of a cartwheel.
            materialize(PenroseTiling(u, WormFill(1)), window)
        self.assertEqual(type(cm.exception), ValueError, "test_cartwheel assert-2")
        with self.assertRaises(Exception) as cm:
            # Invalid filling index.
            PenroseTiling(u, CartwheelFill(12))
        self.assertEqual(type(cm.exception), ValueError, "test_cartwheel assert-3")

    def test_cartwheel_half_worms(self):
        """Unit test for materialize() with a cartwheel filling in windows without the cartwheel center."""
        u = make_params((0, 0, 0, 0, 0))
        for k in (0, 7):
            whole = set(materialize(PenroseTiling(u, CartwheelFill(k)), Window.around(6)))
            for idx, c in enumerate([PointV(3, 0), PointV(0, 3), 4 * V[2], PointV(3, 3)]):
                tiles = materialize(PenroseTiling(u, CartwheelFill(k)), Window.around(2, c))
                self.assertTrue(audit_tiling(tiles).is_valid(), f"test_cartwheel_half_worms {k}/{idx}/1")
                self.assertTrue(any(t.get_origin() == PenroseConst.ORIGIN_CARTWHEELFILL for t in tiles),
                                f"test_cartwheel_half_worms {k}/{idx}/2")
                self.assertTrue(set(tiles) <= whole, f"test_cartwheel_half_worms {k}/{idx}/3")

        # Test exceptions.
        with self.assertRaises(Exception) as cm:
            # Worm filling of a half-worm of a cartwheel.
            materialize(PenroseTiling(u, WormFill(1)), Window.around(2, PointV(3, 0)))
        self.assertEqual(type(cm.exception), ValueError, "test_cartwheel_half_worms assert-1")

    def test_worm(self):
        """Unit test for materialize() with a worm."""
        u = make_params(TestData.WORM_U)
        window = Window.around(4)
        plus = materialize(PenroseTiling(u, WormFill(1)), window)
        minus = materialize(PenroseTiling(u, WormFill(-1)), window)
        self.assertTrue(audit_tiling(plus).is_valid(), "test_worm 1")
        self.assertTrue(audit_tiling(minus).is_valid(), "test_worm 2")
        self.assertFalse(same_tiles(plus, minus), "test_worm 3")
        # Tiles off the worm are common.
        common = set(plus) & set(minus)
        filled = [t for t in plus if t.get_origin() == PenroseConst.ORIGIN_WORMFILL]
        self.assertTrue(filled, "test_worm 5")
        self.assertEqual(len(filled) % 3, 0, "test_worm 6")
        self.assertTrue(all(t in common for t in plus if t.get_origin() == PenroseConst.ORIGIN_DUAL), "test_worm 7")

        # Test exceptions.
        with self.assertRaises(Exception) as cm:
            # No filling.
            materialize(PenroseTiling(u), window)
        self.assertEqual(type(cm.exception), ValueError, "test_worm assert-1")
        with self.assertRaises(Exception) as cm:
            # Invalid worm sign.
            PenroseTiling(u, WormFill(0))
        self.assertEqual(type(cm.exception), ValueError, "test_worm assert-2")


if __name__ == "__main__":
    unittest.main()

# End
