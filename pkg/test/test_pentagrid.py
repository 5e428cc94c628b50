#
#    Unitest for `pentagrid` module
#    penrosewang authors (C) 2024.
#
import unittest
from fractions import Fraction
from itertools import combinations
from test_data import TestData
from penrosewang import Qr5, PointV, ZERO, ALPHA, V, F0, F1, PenroseConst, GridLine, Window, SingularPatchError, \
    make_params, translate_params, rotate_params, normal_form, cocycle_m, crossings_in_window, singularity_scan, \
    grid_patch, grid_corner, lattice_translation, shifted_pair, dot
from penrosewang.exactgeom import solve_dots
from penrosewang.pentagrid import spine_family, count_family_lines, scan_crossings, cartwheel_center


class PentagridParamsTest(unittest.TestCase):
    """Unit test for PentagridParams class and the parameter functions."""

    def test_make_params(self):
        """Unit test for make_params() function."""
        u = make_params((1, 0, Fraction(-1, 3), 0, Fraction(1, 3)))
        self.assertEqual(u.get_u(), (ZERO, ZERO, Qr5(Fraction(2, 3)), ZERO, Qr5(Fraction(1, 3))), "test_make_params 1")
        self.assertEqual(u[2], Qr5(Fraction(2, 3)), "test_make_params 2")
        self.assertAlmostEqual(u.get_u_float()[4], 1 / 3, 12, "test_make_params 3")
        self.assertEqual(make_params((0, 0, ALPHA, 0, 1 - ALPHA))[2], ALPHA, "test_make_params 4")
        self.assertEqual(u, make_params((0, 1, Fraction(2, 3), 3, Fraction(-2, 3))), "test_make_params 5")

        # Test exceptions.
        with self.assertRaises(Exception) as cm:
            # Wrong length.
            make_params((0, 0, 0, 0))
        self.assertEqual(type(cm.exception), ValueError, "test_make_params assert-1")
        with self.assertRaises(Exception) as cm:
            # Fractional sum.
            make_params((Fraction(1, 2), 0, 0, 0, 0))
        self.assertEqual(type(cm.exception), ValueError, "test_make_params assert-2")
        with self.assertRaises(Exception) as cm:
            # Float value.
            make_params((0.5, 0.5, 0, 0, 0))
        self.assertEqual(type(cm.exception), ValueError, "test_make_params assert-3")
        with self.assertRaises(Exception) as cm:
            # Irrational sum.
            make_params((ALPHA, 0, 0, 0, 0))
        self.assertEqual(type(cm.exception), ValueError, "test_make_params assert-4")

    def test_translate(self):
        """Unit test for translate_params(), normal_form() and shifted_pair() functions."""
        zero = make_params((0, 0, 0, 0, 0))
        self.assertEqual(translate_params(zero, F0).get_u(), (0, 0, ALPHA, 1 - ALPHA, 0), "test_translate 1")
        self.assertEqual(dot(V[0], F1), 1, "test_translate 2")
        self.assertEqual(dot(V[1], F0), 1, "test_translate 3")
        self.assertEqual(dot(V[0], F0), 0, "test_translate 4")
        my_td = TestData()
        for idx in range(10):
            u = my_td.generic_params()
            star = normal_form(u)
            self.assertEqual((star[0], star[1]), (ZERO, ZERO), f"test_translate {idx}/1")
            n = (my_td.rng.randint(-50, 50), my_td.rng.randint(-50, 50))
            moved = normal_form(translate_params(u, lattice_translation(n)))
            self.assertEqual(shifted_pair(star, n), (moved[2], moved[4]), f"test_translate {idx}/2")
            self.assertEqual(shifted_pair(star, n)[0], (star[2] + n[1] * ALPHA).frac(), f"test_translate {idx}/3")

    def test_rotate(self):
        """Unit test for rotate_params() function."""
        u = make_params(TestData.IRRATIONAL_U)
        self.assertEqual(rotate_params(u, 1).get_u()[1], ALPHA, "test_rotate 1")
        self.assertEqual(rotate_params(u, 5), u, "test_rotate 2")
        self.assertEqual(rotate_params(rotate_params(u, 2), 3), u, "test_rotate 3")
        # A grid line of the rotated grid is the rotated grid line.
        rotated = rotate_params(u, 1)
        s = PointV(Fraction(2, 3), ALPHA)
        for j in range(5):
            self.assertEqual(dot(V[(j + 1) % 5], s.rot72()) + rotated[(j + 1) % 5], dot(V[j], s) + u[j],
                             f"test_rotate 4/{j}")

    def test_cocycle_m(self):
        """Unit test for cocycle_m() function."""
        my_td = TestData()
        u = my_td.generic_params()
        self.assertEqual(cocycle_m(PointV(), u), (0, 0, 0, 0, 0), "test_cocycle_m 1")
        s = (Fraction(5, 2) - u[0]) * F1 + (Fraction(1, 2) - u[1]) * F0
        self.assertEqual(cocycle_m(s, u)[:2], (2, 0),
                         "test_cocycle_m 2")

        # Test exceptions.
        with self.assertRaises(Exception) as cm:
            # Point on grid lines.
            cocycle_m(PointV(), make_params((0, 0, 0, 0, 0)))
        self.assertEqual(type(cm.exception), ValueError, "test_cocycle_m assert-1")


class WindowTest(unittest.TestCase):
    """Unit test for Window class."""

    def test_window(self):
        """Unit test for Window methods."""
        w = Window.around(3)
        self.assertTrue(w.contains(PointV()), "test_window 1")
        self.assertTrue(w.contains(PointV(3, 0)), "test_window 2")
        self.assertFalse(w.contains(PointV(Fraction(301, 100), 0)), "test_window 3")
        self.assertEqual(len(w.get_corners()), 4, "test_window 4")
        xmin, ymin, xmax, ymax = w.get_bounds()
        self.assertTrue(xmin < 0 < xmax and ymin < 0 < ymax, "test_window 5")
        moved = w.translate(PointV(10, 0))
        self.assertTrue(moved.contains(PointV(10, 0)), "test_window 6")
        self.assertFalse(moved.contains(PointV()), "test_window 7")
        self.assertEqual(Window.around(3, PointV(10, 0)), moved, "test_window 8")
        u = make_params((Fraction(1, 7), Fraction(2, 7), 0, 0, Fraction(4, 7)))
        rhomb = Window.rhomb(u, (0, 0))
        self.assertTrue(rhomb.contains(grid_corner(u, (0, 0))), "test_window 9")
        self.assertTrue(rhomb.contains(grid_corner(u, (0, 0)) + F1 + F0), "test_window 10")

        # Test exceptions.
        with self.assertRaises(Exception) as cm:
            # Empty window.
            Window(V[0], 1, 1, V[1], 0, 1)
        self.assertEqual(type(cm.exception), ValueError, "test_window assert-1")
        with self.assertRaises(Exception) as cm:
            # Parallel normals.
            Window(V[0], 0, 1, -V[0], 0, 1)
        self.assertEqual(type(cm.exception), ValueError, "test_window assert-2")


class CrossingTest(unittest.TestCase):
    """Unit test for the crossing enumeration."""

    @staticmethod
    def brute_force(u, window, kmax=7):
        """Enumerates the crossings of a window with exact arithmetic only."""
        points = {}
        for i, j in combinations(range(5), 2):
            for ki in range(-kmax, kmax + 1):
                for kj in range(-kmax, kmax + 1):
                    s = solve_dots(ki - u[i], V[i], kj - u[j], V[j])
                    if window.contains(s):
                        points.setdefault(s, set()).update({GridLine(i, ki), GridLine(j, kj)})
        return points

    def test_crossings_in_window(self):
        """Unit test for crossings_in_window() function."""
        my_td = TestData()
        window = Window.around(3)
        for idx, u in enumerate([my_td.generic_params(), make_params((0, 0, 0, 0, 0)),
                                 make_params(TestData.WORM_U)]):
            expected = self.brute_force(u, window)
            found = crossings_in_window(u, window)
            self.assertEqual(len(found), len(expected), f"test_crossings_in_window {idx}/1")
            for c in found:
                self.assertIn(c.get_point(), expected, f"test_crossings_in_window {idx}/2")
                self.assertEqual(set(c.get_incident()), expected[c.get_point()], f"test_crossings_in_window {idx}/3")
                for line in c.get_incident():
                    self.assertEqual(dot(V[line.j], c.get_point()) + u[line.j], line.k,
                                     f"test_crossings_in_window {idx}/4")
                self.assertEqual(len(c.get_cells()), 2 * c.get_multiplicity(), f"test_crossings_in_window {idx}/5")

        # A 5-fold crossing at the origin.
        found = crossings_in_window(make_params((0, 0, 0, 0, 0)), Window.around(1))
        five = [c for c in found if c.get_multiplicity() == 5]
        self.assertEqual(len(five), 1, "test_crossings_in_window 6")
        self.assertTrue(five[0].get_point().is_zero(), "test_crossings_in_window 7")
        cells = five[0].get_cells()
        self.assertEqual(len(set(cells)), 10, "test_crossings_in_window 8")
        self.assertEqual(cells[0], (0, 0, -1, -1, -1), "test_crossings_in_window 9")

    def test_cells(self):
        """Unit test for Crossing.get_cells() method."""
        my_td = TestData()
        u = my_td.generic_params()
        for idx, c in enumerate(crossings_in_window(u, Window.around(2))):
            cells = c.get_cells()
            i, j = c.get_families()
            # Consecutive cells differ in one family by one.
            for a, b in zip(cells, cells[1:] + cells[:1]):
                self.assertEqual(sum(abs(x - y) for x, y in zip(a, b)), 1, f"test_cells {idx}/1")
            self.assertIn(c.get_low_cell(i, j), cells, f"test_cells {idx}/2")

    def test_spine_family(self):
        """Unit test for spine_family() function."""
        test_data = [({0, 1, 3}, 3), ({0, 1, 4}, 0), ({0, 1, 2}, 1), ({1, 2, 4}, 4), ({0, 2, 3}, 0),
                     ({2, 3, 4}, 3), ({0, 3, 4}, 4), ({1, 2, 3}, 2), ({0, 2, 4}, 2), ({1, 3, 4}, 1)]
        for idx, (families, middle) in enumerate(test_data):
            self.assertEqual(spine_family(families), middle, f"test_spine_family {idx}")

        # Test exceptions.
        with self.assertRaises(Exception) as cm:
            # Two families.
            spine_family((0, 1))
        self.assertEqual(type(cm.exception), ValueError, "test_spine_family assert-1")

    def test_singularity_scan(self):
        """Unit test for singularity_scan() function."""
        my_td = TestData()
        scan = singularity_scan(make_params((0, 0, 0, 0, 0)), Window.around(2))
        self.assertEqual(scan.kind, PenroseConst.SCAN_CARTWHEEL, "test_singularity_scan 1")
        self.assertTrue(scan.center.is_zero(), "test_singularity_scan 2")
        self.assertEqual(scan.get_name(), "cartwheel", "test_singularity_scan 3")
        scan = singularity_scan(make_params(TestData.WORM_U), Window.around(5))
        self.assertEqual(scan.kind, PenroseConst.SCAN_WORM, "test_singularity_scan 4")
        self.assertEqual(scan.spine, GridLine(3, 0), "test_singularity_scan 5")
        for idx in range(5):
            scan = singularity_scan(my_td.generic_params(), Window.around(5))
            self.assertEqual(scan.kind, PenroseConst.SCAN_NONSINGULAR, f"test_singularity_scan 6/{idx}")
        # The translated worm leaves a window around the origin.
        u = translate_params(make_params(TestData.WORM_U), 4 * V[3])
        self.assertEqual(singularity_scan(u, Window.around(2)).kind, PenroseConst.SCAN_NONSINGULAR,
                         "test_singularity_scan 7")
        self.assertEqual(scan_crossings([]).kind, PenroseConst.SCAN_NONSINGULAR, "test_singularity_scan 8")
        u = make_params(TestData.IRRATIONAL_U)
        self.assertEqual(singularity_scan(u, Window.around(8)).kind, PenroseConst.SCAN_NONSINGULAR,
                         "test_singularity_scan 9")
        self.assertTrue(all(c.get_multiplicity() == 2 for c in crossings_in_window(u, Window.around(3))),
                        "test_singularity_scan 10")

    def test_cartwheel_center(self):
        """Unit test for cartwheel_center() function."""
        zero = make_params((0, 0, 0, 0, 0))
        self.assertTrue(cartwheel_center(zero).is_zero(), "test_cartwheel_center 1")
        t = 3 * V[1] - V[3]
        self.assertEqual(cartwheel_center(translate_params(zero, t)), -t, "test_cartwheel_center 2")
        self.assertIsNone(cartwheel_center(make_params(TestData.WORM_U)), "test_cartwheel_center 3")
        self.assertIsNone(cartwheel_center(make_params(TestData.IRRATIONAL_U)), "test_cartwheel_center 5")
        my_td = TestData()
        for idx in range(5):
            self.assertIsNone(cartwheel_center(my_td.generic_params()), f"test_cartwheel_center 4/{idx}")

    def test_scan_half_worms(self):
        """Unit test for singularity_scan() in windows with half-worms of a cartwheel but without its center."""
        zero = make_params((0, 0, 0, 0, 0))
        test_data = [PointV(3, 0), PointV(0, 3), 4 * V[2], PointV(3, 3)]
        for idx, c in enumerate(test_data):
            window = Window.around(2, c)
            self.assertFalse(window.contains(PointV()), f"test_scan_half_worms {idx}/1")
            crossings = crossings_in_window(zero, window)
            self.assertTrue(any(x.get_multiplicity() == 3 for x in crossings), f"test_scan_half_worms {idx}/2")
            scan = singularity_scan(zero, window)
            self.assertEqual(scan.kind, PenroseConst.SCAN_CARTWHEEL, f"test_scan_half_worms {idx}/3")
            self.assertTrue(scan.center.is_zero(), f"test_scan_half_worms {idx}/4")
        # The same windows around a translated cartwheel.
        t = PointV(1, 2)
        u = translate_params(zero, -t)
        scan = singularity_scan(u, Window.around(2, PointV(3, 0) + t))
        self.assertEqual(scan.kind, PenroseConst.SCAN_CARTWHEEL, "test_scan_half_worms 5")
        self.assertEqual(scan.center, t, "test_scan_half_worms 6")


class GridPatchTest(unittest.TestCase):
    """Unit test for GridPatch class."""

    def test_grid_patch(self):
        """Unit test for GridPatch methods."""
        my_td = TestData()
        u = my_td.generic_params()
        for idx, n in enumerate([(0, 0), (3, -2), (-7, 11)]):
            patch = grid_patch(u, n)
            self.assertEqual(patch.get_n(), n, f"test_grid_patch {idx}/1")
            self.assertEqual(patch.get_params(), u, f"test_grid_patch {idx}/2")
            self.assertEqual(patch.get_max_multiplicity(), 2, f"test_grid_patch {idx}/3")
            z, zp = patch.get_symbol()
            self.assertIn(z, (0, 1), f"test_grid_patch {idx}/4")
            self.assertIn(zp, (0, 1), f"test_grid_patch {idx}/5")
            for m in patch.get_cells():
                self.assertEqual(m[:2], n, f"test_grid_patch {idx}/6")
                self.assertEqual(cocycle_m(patch.get_cell_point(m), u), m, f"test_grid_patch {idx}/7")
            self.assertIn(count_family_lines(u, n, 3), (1, 2), f"test_grid_patch {idx}/8")

        # Test exceptions.
        with self.assertRaises(Exception) as cm:
            # Grid line through a corner.
            count_family_lines(make_params((0, 0, 0, 0, 0)), (0, 0), 3)
        self.assertEqual(type(cm.exception), SingularPatchError, "test_grid_patch assert-1")


if __name__ == "__main__":
    unittest.main()

# End
