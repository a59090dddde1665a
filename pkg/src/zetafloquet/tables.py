"""Zero heights reported by the trapped-ion measurement, keyed by drive frequency.

Each entry is ``(index, mean, std)`` with std the bootstrap spread of the mean.
Frequencies are in units of the bare tunneling J.
"""

# entry 22 is stored as 82.910, the true height rounded; the source table lists 82.914
EXACT_ZEROS = (
    14.135, 21.022, 25.011, 30.425, 32.935, 37.586, 40.919, 43.327,
    48.005, 49.774, 52.970, 56.446, 59.347, 60.832, 65.113, 67.080,
    69.546, 72.067, 75.705, 77.145, 79.337, 82.910, 84.736, 87.425,
    88.809, 92.492, 94.651, 95.871, 98.831, 101.318, 103.726, 105.447,
    107.169, 111.030, 111.875, 114.320, 116.227, 118.791, 121.370, 122.947,
    124.257, 127.517, 129.579, 131.088, 133.498, 134.757, 138.116, 139.736,
    141.124, 143.112, 146.001, 147.423, 150.054, 150.925, 153.025, 156.113,
    157.598, 158.850, 161.189, 163.031, 165.537, 167.184, 169.095, 169.912,
    173.412, 174.754, 176.441, 178.377, 179.916, 182.207, 184.874, 185.599,
    187.229, 189.416, 192.027, 193.080, 195.265, 196.876, 198.015, 201.265,
)

MEASURED_ZEROS = {
    5: (
        (1, 14.07, 0.01),
        (2, 21.04, 0.02),
        (3, 24.70, 0.03),
        (4, 30.59, 0.02),
        (5, 32.76, 0.03),
        (6, 37.64, 0.02),
        (7, 40.95, 0.02),
        (8, 42.85, 0.09),
        (9, 48.23, 0.04),
        (10, 49.26, 0.19),
        (11, 52.93, 0.02),
        (12, 56.56, 0.03),
        (13, 59.44, 0.05),
        (14, 60.10, 0.48),
        (15, 65.53, 0.11),
        (16, 67.06, 0.05),
        (17, 69.36, 0.04),
        (18, 71.82, 0.03),
        (19, 76.33, 0.37),
        (20, 76.84, 0.08),
        (21, 78.89, 0.06),
        (22, 84.12, 1.17),
        (23, 84.82, 0.02),
        (24, 87.50, 0.07),
        (25, 87.93, 0.47),
        (26, 92.96, 0.04),
        (27, 94.55, 0.59),
        (28, 95.82, 0.08),
        (29, 98.87, 0.03),
    ),
    8: (
        (1, 14.06, 0.02),
        (2, 21.00, 0.02),
        (3, 24.87, 0.02),
        (4, 30.31, 0.02),
        (5, 32.72, 0.03),
        (6, 37.62, 0.02),
        (7, 40.89, 0.03),
        (8, 43.12, 0.04),
        (9, 47.87, 0.06),
        (10, 49.67, 0.03),
        (11, 52.83, 0.04),
        (12, 56.58, 0.03),
        (13, 59.33, 0.09),
        (14, 60.13, 4.14),
        (15, 64.99, 0.04),
        (16, 67.10, 0.03),
        (17, 69.32, 0.07),
        (18, 71.84, 0.03),
        (19, 75.72, 0.12),
        (20, 77.41, 0.06),
        (21, 79.26, 0.02),
        (22, 82.80, 0.02),
        (23, 84.67, 0.03),
        (24, 87.69, 2.44),
        (25, 88.52, 0.03),
        (26, 92.34, 0.03),
        (27, 94.97, 0.12),
        (28, 95.69, 0.05),
        (29, 98.55, 0.06),
        (30, 101.13, 0.03),
        (31, 103.50, 0.04),
        (32, 105.03, 0.16),
        (33, 106.03, 1.12),
        (34, 111.03, 0.16),
        (35, 111.54, 0.19),
        (36, 113.94, 0.1),
        (37, 115.96, 0.11),
        (38, 118.77, 0.03),
        (39, 121.27, 0.06),
        (40, 122.99, 0.22),
        (41, 122.82, 0.48),
        (42, 127.46, 0.03),
        (43, 129.36, 0.32),
        (44, 130.84, 0.16),
        (45, 133.41, 0.07),
        (46, 134.34, 0.24),
        (47, 138.14, 0.08),
        (48, 139.52, 0.06),
        (49, 140.86, 0.08),
        (50, 142.90, 0.09),
        (51, 146.03, 0.08),
        (52, 147.34, 0.08),
        (53, 150.04, 0.06),
        (54, 150.20, 4.14),
        (55, 152.68, 0.06),
        (56, 156.27, 0.1),
        (57, 157.69, 0.2),
        (58, 159.16, 3.79),
        (59, 161.32, 0.08),
        (60, 163.00, 0.05),
        (61, 165.41, 0.05),
        (62, 167.13, 0.05),
        (63, 168.49, 4.58),
        (64, 169.18, 0.67),
        (65, 173.33, 0.05),
        (66, 174.75, 0.03),
        (67, 176.23, 0.11),
        (68, 177.97, 1.75),
        (69, 179.89, 0.05),
        (70, 182.28, 0.06),
        (71, 185.51, 2.94),
        (72, 185.89, 2.23),
        (73, 187.10, 1.88),
        (74, 189.50, 0.0),
        (75, 192.07, 0.09),
        (76, 193.09, 0.04),
        (77, 195.56, 2.17),
        (78, 196.93, 0.28),
        (79, 196.81, 0.42),
        (80, 199.24, 5.76),
    ),
    12: (
        (1, 13.99, 0.04),
        (2, 20.93, 0.05),
        (3, 24.87, 0.07),
        (4, 30.29, 0.03),
        (5, 32.57, 0.08),
        (6, 37.39, 0.02),
        (7, 40.78, 0.03),
        (8, 43.23, 0.04),
        (9, 47.94, 0.06),
        (10, 49.36, 0.23),
        (11, 52.88, 0.05),
        (12, 56.28, 0.03),
        (13, 59.35, 0.06),
        (14, 60.41, 1.44),
        (15, 65.05, 0.06),
        (16, 66.98, 0.1),
        (17, 69.11, 0.28),
        (18, 71.76, 0.08),
        (19, 75.23, 3.32),
        (20, 76.80, 0.09),
        (21, 78.95, 0.04),
        (22, 82.67, 0.04),
        (23, 84.31, 0.12),
        (24, 87.23, 0.06),
        (25, 88.33, 0.47),
        (26, 92.37, 0.05),
        (27, 94.34, 1.44),
        (28, 94.66, 2.9),
        (29, 98.69, 0.04),
        (30, 101.31, 0.03),
        (31, 103.74, 0.09),
        (32, 105.49, 0.07),
        (33, 106.99, 0.17),
        (34, 111.60, 2.27),
        (35, 111.88, 0.07),
        (36, 114.49, 0.09),
        (37, 116.12, 0.06),
        (38, 118.71, 0.04),
        (39, 121.78, 0.97),
        (40, 123.48, 3.23),
        (41, 124.43, 0.19),
        (42, 127.51, 0.04),
        (43, 129.66, 0.12),
        (44, 130.91, 1.56),
        (45, 134.00, 0.36),
        (46, 134.89, 1.32),
        (47, 138.27, 0.1),
        (48, 139.98, 0.09),
        (49, 141.20, 0.05),
        (50, 142.72, 0.22),
        (51, 145.80, 0.04),
        (52, 147.17, 0.46),
        (53, 149.62, 0.73),
        (54, 149.47, 1.97),
        (55, 152.79, 0.05),
        (56, 156.02, 2.03),
        (57, 157.60, 0.89),
        (58, 158.84, 0.89),
        (59, 161.00, 0.04),
        (60, 162.43, 0.58),
        (61, 165.94, 0.26),
        (62, 167.08, 0.11),
        (63, 169.16, 0.49),
        (64, 169.17, 0.27),
        (65, 173.60, 0.19),
        (66, 174.65, 0.07),
        (67, 176.52, 0.16),
        (68, 178.26, 0.1),
        (69, 180.01, 2.62),
        (70, 182.14, 0.06),
        (71, 184.82, 0.17),
        (72, 185.43, 0.24),
        (73, 187.04, 0.72),
        (74, 189.28, 0.06),
        (75, 192.20, 1.69),
        (76, 193.10, 0.12),
        (77, 195.18, 0.8),
        (78, 196.04, 3.04),
        (79, 197.74, 0.1),
        (80, 200.14, 0.05),
    ),
    16: (
        (1, 14.03, 0.03),
        (2, 20.82, 0.03),
        (3, 24.99, 0.04),
        (4, 30.27, 0.04),
        (5, 32.29, 0.23),
        (6, 37.59, 0.04),
        (7, 40.70, 0.04),
        (8, 42.74, 0.4),
        (9, 47.75, 0.09),
        (10, 49.23, 0.22),
        (11, 52.78, 0.05),
        (12, 56.49, 0.05),
        (13, 59.08, 0.28),
        (14, 60.67, 0.09),
        (15, 64.92, 0.06),
        (16, 66.50, 0.4),
        (17, 69.44, 0.07),
        (18, 71.95, 0.07),
        (19, 75.35, 3.17),
        (20, 76.82, 0.83),
        (21, 79.09, 0.09),
        (22, 82.74, 0.08),
        (23, 84.58, 0.08),
        (24, 87.20, 0.08),
        (25, 88.70, 1.28),
        (26, 92.24, 0.06),
        (27, 94.34, 2.11),
        (28, 95.13, 1.25),
        (29, 98.74, 0.06),
        (30, 101.33, 0.05),
        (31, 103.66, 0.05),
        (32, 104.46, 0.58),
        (33, 106.93, 0.05),
        (34, 110.27, 1.73),
        (35, 112.86, 3.37),
        (36, 114.06, 0.06),
        (37, 115.82, 0.2),
        (38, 118.96, 0.07),
        (39, 122.26, 0.69),
        (40, 123.12, 0.05),
        (41, 123.85, 0.38),
        (42, 127.36, 0.07),
        (43, 129.57, 0.12),
        (44, 131.22, 0.05),
        (45, 133.62, 0.12),
        (46, 134.45, 0.27),
        (47, 138.12, 0.11),
        (48, 139.72, 0.09),
        (49, 140.57, 1.07),
        (50, 142.91, 0.13),
        (51, 146.24, 0.52),
        (52, 147.43, 0.11),
        (53, 150.10, 1.25),
        (54, 150.96, 0.22),
        (55, 152.89, 0.14),
        (56, 156.19, 3.43),
        (57, 157.40, 0.15),
        (58, 158.57, 0.79),
        (59, 161.25, 0.03),
        (60, 162.75, 0.12),
        (61, 165.71, 0.14),
        (62, 167.42, 0.85),
        (63, 169.01, 0.14),
        (64, 169.80, 1.38),
        (65, 173.36, 0.08),
        (66, 174.40, 1.05),
        (67, 176.41, 0.13),
        (68, 178.11, 0.11),
        (69, 179.36, 0.51),
        (70, 181.98, 0.08),
        (71, 184.77, 0.86),
        (72, 184.60, 3.28),
        (73, 187.22, 0.34),
        (74, 189.23, 0.06),
        (75, 192.42, 0.41),
        (76, 193.06, 1.59),
        (77, 195.55, 0.58),
        (78, 196.81, 0.09),
        (79, 197.80, 1.54),
        (80, 200.47, 0.16),
    ),
}
