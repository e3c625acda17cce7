"""Frozen cutting-planes derivations of the adder bit equations.

Generated by tools/gen_templates.py; do not edit.  Variables are the
roles of ``ordering.FIRST_ROLES`` / ``ordering.INTERIOR_ROLES`` and
hypothesis ``i`` is the ``i``-th clause of the bit's extension axioms.
"""

from .cp import Add, AxGe, AxLe, Div, Hyp

_KINDS = {"h": Hyp, "axge": AxGe, "axle": AxLe, "add": Add, "div": Div}

RAW = {'first': {'ge': (('axge', 1), ('axle', 1), ('add', 0, 1, 1, 1), ('div', 2, 2), ('axle', 2),
                  ('axge', 5), ('axle', 6), ('add', 3, 1, 0, 1), ('add', 7, 1, 4, 1),
                  ('add', 8, 1, 5, 1), ('add', 9, 1, 6, 2), ('h', 11), ('add', 10, 1, 11, 1),
                  ('axge', 2), ('add', 3, 1, 0, 1), ('add', 14, 1, 13, 1), ('add', 15, 1, 5, 1),
                  ('add', 16, 1, 6, 4), ('add', 10, 1, 17, 1), ('div', 18, 2),
                  ('add', 12, 1, 19, 1), ('div', 20, 2), ('add', 2, 1, 0, 1), ('add', 22, 1, 4, 1),
                  ('add', 23, 1, 5, 1), ('add', 10, 1, 24, 1), ('div', 25, 2),
                  ('add', 21, 1, 26, 1), ('div', 27, 2), ('add', 28, 1, 11, 1), ('add', 3, 1, 1, 1),
                  ('add', 30, 1, 13, 1), ('add', 31, 1, 5, 1), ('add', 32, 1, 6, 4),
                  ('add', 28, 1, 33, 1), ('div', 34, 2), ('h', 10), ('add', 28, 1, 36, 1),
                  ('add', 37, 1, 13, 1), ('add', 35, 1, 38, 1), ('div', 39, 2),
                  ('add', 29, 1, 40, 1), ('div', 41, 2), ('add', 3, 1, 0, 1), ('add', 43, 1, 4, 1),
                  ('add', 44, 1, 5, 1), ('add', 28, 1, 45, 1), ('div', 46, 2),
                  ('add', 42, 1, 47, 1), ('div', 48, 2), ('add', 49, 1, 11, 1), ('axle', 5),
                  ('add', 3, 1, 1, 1), ('add', 52, 1, 13, 1), ('add', 53, 1, 51, 1),
                  ('add', 54, 1, 6, 4), ('add', 49, 1, 55, 1), ('div', 56, 2), ('h', 2),
                  ('add', 49, 1, 58, 1), ('h', 4), ('add', 49, 1, 60, 1), ('h', 6),
                  ('add', 49, 1, 62, 1), ('axge', 3), ('add', 61, 1, 5, 1), ('add', 65, 1, 64, 1),
                  ('add', 63, 1, 1, 1), ('add', 66, 1, 67, 1), ('div', 68, 2), ('add', 59, 1, 5, 1),
                  ('add', 70, 1, 1, 1), ('add', 69, 1, 13, 1), ('add', 71, 1, 72, 1),
                  ('div', 73, 2), ('add', 74, 1, 6, 1), ('add', 57, 1, 75, 1), ('div', 76, 2),
                  ('add', 49, 1, 36, 1), ('add', 78, 1, 13, 1), ('add', 77, 1, 79, 1),
                  ('div', 80, 2), ('add', 50, 1, 81, 1), ('div', 82, 2), ('add', 3, 1, 1, 1),
                  ('add', 84, 1, 4, 3), ('add', 85, 1, 5, 1), ('add', 49, 1, 86, 1), ('div', 87, 2),
                  ('add', 3, 1, 0, 3), ('add', 89, 1, 4, 3), ('add', 90, 1, 51, 1),
                  ('add', 49, 1, 91, 1), ('div', 92, 2), ('h', 1), ('add', 49, 1, 94, 1), ('h', 5),
                  ('add', 49, 1, 96, 1), ('add', 49, 1, 62, 1), ('add', 97, 1, 5, 1),
                  ('add', 99, 1, 64, 1), ('add', 98, 1, 4, 1), ('add', 100, 1, 101, 1),
                  ('div', 102, 2), ('add', 95, 1, 5, 1), ('add', 104, 1, 4, 1),
                  ('add', 103, 1, 0, 1), ('add', 105, 1, 106, 1), ('div', 107, 2), ('axge', 6),
                  ('add', 108, 1, 109, 1), ('add', 93, 1, 110, 1), ('div', 111, 2),
                  ('add', 88, 1, 112, 1), ('div', 113, 2), ('add', 3, 1, 0, 1),
                  ('add', 115, 1, 13, 1), ('add', 116, 1, 5, 1), ('add', 49, 1, 117, 1),
                  ('div', 118, 2), ('add', 114, 1, 119, 1), ('div', 120, 2), ('add', 83, 1, 121, 1),
                  ('div', 122, 2)),
           'le': (('axge', 1), ('axle', 1), ('add', 0, 1, 1, 1), ('div', 2, 2), ('axge', 2),
                  ('axle', 5), ('axge', 6), ('add', 3, 1, 1, 1), ('add', 7, 1, 4, 1),
                  ('add', 8, 1, 5, 1), ('add', 9, 1, 6, 2), ('add', 2, 1, 1, 1),
                  ('add', 11, 1, 4, 1), ('add', 12, 1, 5, 1), ('add', 10, 1, 13, 1), ('div', 14, 2),
                  ('axle', 2), ('add', 3, 1, 1, 1), ('add', 17, 1, 16, 1), ('add', 18, 1, 5, 1),
                  ('add', 19, 1, 6, 4), ('add', 10, 1, 20, 1), ('div', 21, 2), ('h', 9),
                  ('add', 10, 1, 23, 1), ('add', 3, 1, 0, 1), ('add', 25, 1, 4, 3),
                  ('add', 26, 1, 5, 1), ('add', 27, 1, 6, 4), ('add', 10, 1, 28, 1), ('div', 29, 2),
                  ('add', 24, 1, 30, 1), ('div', 31, 2), ('add', 22, 1, 32, 1), ('div', 33, 2),
                  ('add', 15, 1, 34, 1), ('div', 35, 2), ('add', 3, 1, 1, 1), ('add', 37, 1, 4, 1),
                  ('add', 38, 1, 5, 1), ('add', 36, 1, 39, 1), ('div', 40, 2), ('h', 4),
                  ('add', 36, 1, 42, 1), ('h', 7), ('add', 36, 1, 44, 1), ('h', 0),
                  ('add', 36, 1, 46, 1), ('add', 45, 1, 1, 1), ('add', 48, 1, 16, 1),
                  ('add', 47, 1, 5, 1), ('add', 49, 1, 50, 1), ('div', 51, 2), ('axge', 5),
                  ('add', 3, 1, 1, 3), ('add', 54, 1, 16, 1), ('add', 55, 1, 53, 1),
                  ('add', 56, 1, 6, 4), ('add', 36, 1, 57, 1), ('div', 58, 2), ('add', 52, 1, 6, 1),
                  ('add', 60, 1, 59, 1), ('div', 61, 2), ('add', 3, 1, 0, 1), ('add', 63, 1, 16, 1),
                  ('add', 64, 1, 5, 1), ('add', 65, 1, 6, 4), ('add', 36, 1, 66, 1), ('div', 67, 2),
                  ('add', 62, 1, 68, 1), ('div', 69, 2), ('add', 36, 1, 23, 1), ('h', 8),
                  ('add', 36, 1, 72, 1), ('h', 3), ('add', 36, 1, 74, 1), ('add', 73, 1, 4, 1),
                  ('add', 76, 1, 0, 1), ('add', 75, 1, 5, 1), ('add', 77, 1, 78, 1), ('div', 79, 2),
                  ('add', 3, 1, 0, 1), ('add', 81, 1, 4, 3), ('add', 82, 1, 53, 1),
                  ('add', 83, 1, 6, 4), ('add', 36, 1, 84, 1), ('div', 85, 2), ('add', 80, 1, 6, 1),
                  ('add', 87, 1, 86, 1), ('div', 88, 2), ('add', 71, 1, 89, 1), ('div', 90, 2),
                  ('add', 70, 1, 91, 1), ('div', 92, 2), ('add', 41, 1, 93, 1), ('div', 94, 2))},
 'interior': {'ge': (('axge', 1), ('axle', 1), ('add', 0, 1, 1, 1), ('div', 2, 2), ('axle', 2),
                     ('axge', 3), ('axge', 9), ('axle', 12), ('add', 3, 1, 0, 1),
                     ('add', 8, 1, 4, 1), ('add', 9, 1, 5, 1), ('add', 10, 1, 6, 1),
                     ('add', 11, 1, 7, 2), ('axle', 9), ('add', 3, 1, 0, 1), ('add', 14, 1, 4, 1),
                     ('add', 15, 1, 5, 1), ('add', 16, 1, 13, 1), ('add', 17, 1, 7, 2),
                     ('add', 12, 1, 18, 1), ('div', 19, 2), ('h', 14), ('add', 12, 1, 21, 1),
                     ('h', 7), ('add', 12, 1, 23, 1), ('h', 25), ('add', 12, 1, 25, 1), ('h', 19),
                     ('add', 12, 1, 27, 1), ('h', 21), ('add', 12, 1, 29, 1), ('axge', 11),
                     ('axge', 4), ('add', 28, 1, 31, 1), ('add', 33, 1, 32, 1),
                     ('add', 30, 1, 4, 1), ('add', 34, 1, 35, 1), ('div', 36, 2),
                     ('add', 26, 1, 32, 1), ('add', 38, 1, 4, 1), ('add', 37, 1, 7, 1),
                     ('add', 39, 1, 40, 1), ('div', 41, 2), ('add', 24, 1, 4, 1),
                     ('add', 43, 1, 7, 1), ('axle', 6), ('add', 42, 1, 45, 1),
                     ('add', 44, 1, 46, 1), ('div', 47, 2), ('add', 2, 1, 0, 1),
                     ('add', 49, 1, 4, 3), ('add', 50, 1, 5, 1), ('add', 51, 1, 6, 3),
                     ('add', 12, 1, 52, 1), ('div', 53, 2), ('add', 48, 1, 6, 1),
                     ('add', 54, 1, 45, 1), ('add', 55, 1, 56, 1), ('div', 57, 2), ('h', 10),
                     ('add', 12, 1, 59, 1), ('axle', 7), ('add', 58, 1, 61, 1),
                     ('add', 60, 1, 6, 1), ('add', 63, 1, 4, 1), ('add', 62, 1, 64, 1),
                     ('div', 65, 2), ('h', 15), ('add', 12, 1, 67, 1), ('axge', 8),
                     ('add', 66, 1, 69, 1), ('add', 68, 1, 4, 1), ('add', 70, 1, 71, 1),
                     ('div', 72, 2), ('add', 22, 1, 6, 1), ('add', 74, 1, 73, 1), ('div', 75, 2),
                     ('axge', 2), ('add', 3, 1, 0, 1), ('add', 78, 1, 77, 1), ('add', 79, 1, 5, 1),
                     ('add', 80, 1, 6, 3), ('add', 81, 1, 7, 2), ('add', 12, 1, 82, 1),
                     ('div', 83, 2), ('add', 76, 1, 84, 1), ('div', 85, 2), ('add', 20, 1, 86, 1),
                     ('div', 87, 2), ('add', 88, 1, 21, 1), ('h', 16), ('add', 88, 1, 90, 1),
                     ('h', 9), ('add', 88, 1, 92, 1), ('h', 22), ('add', 88, 1, 94, 1),
                     ('add', 88, 1, 27, 1), ('add', 3, 1, 1, 1), ('add', 97, 1, 4, 3),
                     ('add', 98, 1, 5, 1), ('add', 99, 1, 13, 1), ('add', 100, 1, 7, 4),
                     ('add', 88, 1, 101, 1), ('div', 102, 2), ('h', 1), ('add', 88, 1, 104, 1),
                     ('axle', 4), ('add', 103, 1, 106, 1), ('add', 105, 1, 4, 1),
                     ('add', 108, 1, 13, 1), ('add', 109, 1, 7, 1), ('add', 107, 1, 110, 1),
                     ('div', 111, 2), ('add', 88, 1, 25, 1), ('add', 88, 1, 27, 1),
                     ('add', 88, 1, 29, 1), ('add', 114, 1, 31, 1), ('add', 116, 1, 32, 1),
                     ('add', 115, 1, 4, 1), ('add', 117, 1, 118, 1), ('div', 119, 2),
                     ('add', 113, 1, 32, 1), ('add', 121, 1, 4, 1), ('add', 120, 1, 7, 1),
                     ('add', 122, 1, 123, 1), ('div', 124, 2), ('add', 125, 1, 13, 1),
                     ('add', 112, 1, 126, 1), ('div', 127, 2), ('add', 2, 1, 0, 1),
                     ('add', 129, 1, 4, 3), ('add', 130, 1, 5, 1), ('add', 131, 1, 13, 1),
                     ('add', 88, 1, 132, 1), ('div', 133, 2), ('add', 128, 1, 134, 1),
                     ('div', 135, 2), ('add', 3, 1, 0, 1), ('add', 137, 1, 77, 1),
                     ('add', 138, 1, 5, 1), ('add', 139, 1, 13, 1), ('add', 140, 1, 7, 2),
                     ('add', 88, 1, 141, 1), ('div', 142, 2), ('add', 136, 1, 143, 1),
                     ('div', 144, 2), ('add', 88, 1, 21, 1), ('add', 88, 1, 23, 1),
                     ('add', 88, 1, 25, 1), ('add', 88, 1, 27, 1), ('add', 88, 1, 29, 1),
                     ('add', 149, 1, 31, 1), ('add', 151, 1, 32, 1), ('add', 150, 1, 4, 1),
                     ('add', 152, 1, 153, 1), ('div', 154, 2), ('add', 148, 1, 32, 1),
                     ('add', 156, 1, 4, 1), ('add', 155, 1, 7, 1), ('add', 157, 1, 158, 1),
                     ('div', 159, 2), ('add', 147, 1, 4, 1), ('add', 161, 1, 7, 1),
                     ('add', 160, 1, 45, 1), ('add', 162, 1, 163, 1), ('div', 164, 2),
                     ('add', 3, 1, 0, 1), ('add', 166, 1, 4, 3), ('add', 167, 1, 5, 1),
                     ('add', 168, 1, 6, 3), ('add', 88, 1, 169, 1), ('div', 170, 2),
                     ('add', 165, 1, 6, 1), ('add', 171, 1, 45, 1), ('add', 172, 1, 173, 1),
                     ('div', 174, 2), ('add', 88, 1, 59, 1), ('add', 175, 1, 61, 1),
                     ('add', 176, 1, 6, 1), ('add', 178, 1, 4, 1), ('add', 177, 1, 179, 1),
                     ('div', 180, 2), ('add', 88, 1, 67, 1), ('add', 181, 1, 69, 1),
                     ('add', 182, 1, 4, 1), ('add', 183, 1, 184, 1), ('div', 185, 2),
                     ('add', 146, 1, 6, 1), ('add', 187, 1, 186, 1), ('div', 188, 2), ('h', 11),
                     ('add', 88, 1, 190, 1), ('h', 13), ('add', 88, 1, 192, 1),
                     ('add', 88, 1, 94, 1), ('h', 20), ('add', 88, 1, 195, 1), ('add', 3, 1, 1, 1),
                     ('add', 197, 1, 77, 1), ('add', 198, 1, 5, 1), ('add', 199, 1, 6, 3),
                     ('add', 200, 1, 7, 4), ('add', 88, 1, 201, 1), ('div', 202, 2),
                     ('add', 88, 1, 104, 1), ('add', 203, 1, 106, 1), ('add', 204, 1, 6, 1),
                     ('add', 206, 1, 77, 1), ('add', 207, 1, 7, 1), ('add', 205, 1, 208, 1),
                     ('div', 209, 2), ('add', 88, 1, 25, 1), ('add', 88, 1, 195, 1),
                     ('add', 88, 1, 29, 1), ('add', 212, 1, 31, 1), ('add', 214, 1, 32, 1),
                     ('axge', 6), ('add', 213, 1, 216, 1), ('add', 215, 1, 217, 1), ('div', 218, 2),
                     ('add', 211, 1, 216, 1), ('add', 220, 1, 32, 1), ('add', 219, 1, 7, 1),
                     ('add', 221, 1, 222, 1), ('div', 223, 2), ('add', 210, 1, 216, 1),
                     ('add', 224, 1, 6, 1), ('add', 226, 1, 77, 1), ('add', 225, 1, 227, 1),
                     ('div', 228, 2), ('add', 2, 1, 0, 1), ('add', 230, 1, 77, 1),
                     ('add', 231, 1, 5, 1), ('add', 232, 1, 6, 3), ('add', 88, 1, 233, 1),
                     ('div', 234, 2), ('add', 235, 1, 216, 1), ('add', 229, 1, 236, 1),
                     ('div', 237, 2), ('add', 193, 1, 6, 1), ('add', 239, 1, 77, 1), ('axle', 8),
                     ('add', 238, 1, 241, 1), ('add', 240, 1, 242, 1), ('div', 243, 2),
                     ('add', 88, 1, 190, 1), ('add', 88, 1, 67, 1), ('add', 245, 1, 6, 1),
                     ('add', 247, 1, 69, 1), ('add', 246, 1, 77, 1), ('add', 248, 1, 249, 1),
                     ('div', 250, 2), ('add', 244, 1, 251, 1), ('div', 252, 2),
                     ('add', 189, 1, 253, 1), ('div', 254, 2), ('add', 145, 1, 255, 1),
                     ('div', 256, 2), ('add', 257, 1, 21, 1), ('add', 257, 1, 90, 1),
                     ('add', 257, 1, 92, 1), ('add', 257, 1, 94, 1), ('add', 257, 1, 27, 1),
                     ('axle', 3), ('add', 3, 1, 1, 1), ('add', 264, 1, 4, 3),
                     ('add', 265, 1, 263, 1), ('add', 266, 1, 13, 1), ('add', 267, 1, 7, 4),
                     ('add', 257, 1, 268, 1), ('div', 269, 2), ('h', 2), ('add', 257, 1, 271, 1),
                     ('add', 270, 1, 106, 1), ('add', 272, 1, 1, 1), ('add', 274, 1, 4, 1),
                     ('add', 275, 1, 13, 1), ('add', 276, 1, 7, 1), ('add', 273, 1, 277, 1),
                     ('div', 278, 2), ('add', 257, 1, 104, 1), ('add', 280, 1, 4, 1),
                     ('add', 281, 1, 13, 1), ('add', 282, 1, 7, 1), ('add', 279, 1, 283, 1),
                     ('div', 284, 2), ('add', 257, 1, 25, 1), ('add', 257, 1, 27, 1),
                     ('add', 257, 1, 29, 1), ('add', 287, 1, 31, 1), ('add', 289, 1, 32, 1),
                     ('add', 288, 1, 4, 1), ('add', 290, 1, 291, 1), ('div', 292, 2),
                     ('add', 286, 1, 32, 1), ('add', 294, 1, 4, 1), ('add', 293, 1, 7, 1),
                     ('add', 295, 1, 296, 1), ('div', 297, 2), ('add', 298, 1, 13, 1),
                     ('add', 285, 1, 299, 1), ('div', 300, 2), ('add', 3, 1, 0, 1),
                     ('add', 302, 1, 4, 3), ('add', 303, 1, 5, 1), ('add', 304, 1, 13, 1),
                     ('add', 257, 1, 305, 1), ('div', 306, 2), ('add', 301, 1, 307, 1),
                     ('div', 308, 2), ('h', 17), ('add', 257, 1, 310, 1), ('add', 257, 1, 190, 1),
                     ('add', 257, 1, 23, 1), ('add', 257, 1, 25, 1), ('add', 3, 1, 1, 1),
                     ('add', 315, 1, 77, 1), ('add', 316, 1, 5, 1), ('add', 317, 1, 13, 1),
                     ('add', 318, 1, 7, 4), ('add', 257, 1, 319, 1), ('div', 320, 2),
                     ('add', 3, 1, 0, 3), ('add', 322, 1, 77, 1), ('add', 323, 1, 263, 1),
                     ('add', 324, 1, 13, 1), ('add', 325, 1, 7, 4), ('add', 257, 1, 326, 1),
                     ('div', 327, 2), ('h', 8), ('add', 257, 1, 329, 1), ('h', 3),
                     ('add', 257, 1, 331, 1), ('add', 330, 1, 5, 1), ('add', 333, 1, 0, 1),
                     ('add', 332, 1, 45, 1), ('add', 334, 1, 335, 1), ('div', 336, 2),
                     ('add', 328, 1, 45, 1), ('add', 337, 1, 77, 1), ('add', 339, 1, 13, 1),
                     ('add', 340, 1, 7, 1), ('add', 338, 1, 341, 1), ('div', 342, 2),
                     ('add', 321, 1, 45, 1), ('add', 344, 1, 343, 1), ('div', 345, 2),
                     ('add', 2, 1, 0, 1), ('add', 347, 1, 77, 1), ('add', 348, 1, 5, 1),
                     ('add', 349, 1, 13, 1), ('add', 257, 1, 350, 1), ('div', 351, 2),
                     ('add', 352, 1, 45, 1), ('add', 346, 1, 353, 1), ('div', 354, 2), ('h', 12),
                     ('add', 257, 1, 356, 1), ('add', 355, 1, 69, 1), ('add', 357, 1, 13, 1),
                     ('add', 358, 1, 359, 1), ('div', 360, 2), ('add', 311, 1, 77, 1),
                     ('add', 362, 1, 361, 1), ('div', 363, 2), ('add', 309, 1, 364, 1),
                     ('div', 365, 2), ('add', 257, 1, 21, 1), ('add', 257, 1, 23, 1),
                     ('add', 257, 1, 25, 1), ('add', 257, 1, 27, 1), ('add', 257, 1, 29, 1),
                     ('add', 370, 1, 31, 1), ('add', 372, 1, 32, 1), ('add', 371, 1, 4, 1),
                     ('add', 373, 1, 374, 1), ('div', 375, 2), ('add', 369, 1, 32, 1),
                     ('add', 377, 1, 4, 1), ('add', 376, 1, 7, 1), ('add', 378, 1, 379, 1),
                     ('div', 380, 2), ('add', 368, 1, 4, 1), ('add', 382, 1, 7, 1),
                     ('add', 381, 1, 45, 1), ('add', 383, 1, 384, 1), ('div', 385, 2),
                     ('add', 257, 1, 23, 1), ('add', 257, 1, 27, 1), ('add', 3, 1, 1, 1),
                     ('add', 389, 1, 4, 3), ('add', 390, 1, 5, 1), ('add', 391, 1, 6, 3),
                     ('add', 257, 1, 392, 1), ('div', 393, 2), ('add', 3, 1, 0, 3),
                     ('add', 395, 1, 4, 3), ('add', 396, 1, 263, 1), ('add', 397, 1, 6, 3),
                     ('add', 257, 1, 398, 1), ('div', 399, 2), ('add', 257, 1, 329, 1),
                     ('add', 257, 1, 331, 1), ('add', 401, 1, 5, 1), ('add', 403, 1, 0, 1),
                     ('add', 402, 1, 45, 1), ('add', 404, 1, 405, 1), ('div', 406, 2),
                     ('add', 400, 1, 45, 1), ('axge', 12), ('add', 407, 1, 409, 1),
                     ('add', 410, 1, 6, 1), ('add', 411, 1, 4, 1), ('add', 408, 1, 412, 1),
                     ('div', 413, 2), ('add', 394, 1, 45, 1), ('add', 415, 1, 414, 1),
                     ('div', 416, 2), ('add', 386, 1, 6, 1), ('add', 418, 1, 417, 1),
                     ('div', 419, 2), ('add', 257, 1, 59, 1), ('add', 420, 1, 61, 1),
                     ('add', 421, 1, 6, 1), ('add', 423, 1, 4, 1), ('add', 422, 1, 424, 1),
                     ('div', 425, 2), ('add', 257, 1, 67, 1), ('add', 426, 1, 69, 1),
                     ('add', 427, 1, 4, 1), ('add', 428, 1, 429, 1), ('div', 430, 2),
                     ('add', 367, 1, 6, 1), ('add', 432, 1, 431, 1), ('div', 433, 2),
                     ('add', 257, 1, 190, 1), ('add', 257, 1, 192, 1), ('add', 257, 1, 94, 1),
                     ('add', 257, 1, 195, 1), ('add', 3, 1, 1, 1), ('add', 439, 1, 77, 1),
                     ('add', 440, 1, 263, 1), ('add', 441, 1, 6, 3), ('add', 442, 1, 7, 4),
                     ('add', 257, 1, 443, 1), ('div', 444, 2), ('add', 257, 1, 271, 1),
                     ('add', 445, 1, 106, 1), ('add', 446, 1, 6, 1), ('add', 448, 1, 77, 1),
                     ('add', 449, 1, 1, 1), ('add', 450, 1, 7, 1), ('add', 447, 1, 451, 1),
                     ('div', 452, 2), ('add', 257, 1, 104, 1), ('add', 454, 1, 6, 1),
                     ('add', 455, 1, 77, 1), ('add', 456, 1, 7, 1), ('add', 453, 1, 457, 1),
                     ('div', 458, 2), ('add', 257, 1, 25, 1), ('add', 257, 1, 195, 1),
                     ('add', 257, 1, 29, 1), ('add', 461, 1, 31, 1), ('add', 463, 1, 32, 1),
                     ('add', 462, 1, 216, 1), ('add', 464, 1, 465, 1), ('div', 466, 2),
                     ('add', 460, 1, 216, 1), ('add', 468, 1, 32, 1), ('add', 467, 1, 7, 1),
                     ('add', 469, 1, 470, 1), ('div', 471, 2), ('add', 459, 1, 216, 1),
                     ('add', 472, 1, 6, 1), ('add', 474, 1, 77, 1), ('add', 473, 1, 475, 1),
                     ('div', 476, 2), ('add', 3, 1, 0, 1), ('add', 478, 1, 77, 1),
                     ('add', 479, 1, 5, 1), ('add', 480, 1, 6, 3), ('add', 257, 1, 481, 1),
                     ('div', 482, 2), ('add', 483, 1, 216, 1), ('add', 477, 1, 484, 1),
                     ('div', 485, 2), ('add', 436, 1, 6, 1), ('add', 487, 1, 77, 1),
                     ('add', 486, 1, 241, 1), ('add', 488, 1, 489, 1), ('div', 490, 2),
                     ('add', 257, 1, 190, 1), ('add', 257, 1, 67, 1), ('add', 492, 1, 6, 1),
                     ('add', 494, 1, 69, 1), ('add', 493, 1, 77, 1), ('add', 495, 1, 496, 1),
                     ('div', 497, 2), ('add', 491, 1, 498, 1), ('div', 499, 2),
                     ('add', 434, 1, 500, 1), ('div', 501, 2), ('add', 366, 1, 502, 1),
                     ('div', 503, 2)),
              'le': (('axge', 1), ('axle', 1), ('add', 0, 1, 1, 1), ('div', 2, 2), ('axge', 2),
                     ('axle', 3), ('axle', 9), ('axge', 12), ('add', 3, 1, 1, 1),
                     ('add', 8, 1, 4, 1), ('add', 9, 1, 5, 1), ('add', 10, 1, 6, 1),
                     ('add', 11, 1, 7, 2), ('add', 2, 1, 1, 1), ('add', 13, 1, 4, 1),
                     ('add', 14, 1, 5, 1), ('add', 15, 1, 6, 1), ('add', 12, 1, 16, 1),
                     ('div', 17, 2), ('h', 22), ('add', 12, 1, 19, 1), ('h', 0),
                     ('add', 12, 1, 21, 1), ('add', 3, 1, 0, 1), ('add', 23, 1, 4, 1),
                     ('add', 24, 1, 5, 3), ('add', 25, 1, 6, 1), ('add', 26, 1, 7, 4),
                     ('add', 12, 1, 27, 1), ('div', 28, 2), ('add', 22, 1, 7, 1), ('axge', 4),
                     ('add', 29, 1, 31, 1), ('add', 30, 1, 32, 1), ('div', 33, 2), ('axge', 3),
                     ('add', 3, 1, 1, 1), ('add', 36, 1, 4, 1), ('add', 37, 1, 35, 1),
                     ('add', 38, 1, 6, 1), ('add', 39, 1, 7, 4), ('add', 12, 1, 40, 1),
                     ('div', 41, 2), ('add', 42, 1, 31, 1), ('add', 34, 1, 43, 1), ('div', 44, 2),
                     ('add', 20, 1, 7, 1), ('axle', 11), ('add', 45, 1, 47, 1),
                     ('add', 46, 1, 48, 1), ('div', 49, 2), ('h', 24), ('add', 12, 1, 51, 1),
                     ('add', 50, 1, 52, 1), ('div', 53, 2), ('add', 18, 1, 54, 1), ('div', 55, 2),
                     ('add', 3, 1, 1, 1), ('add', 57, 1, 4, 1), ('add', 58, 1, 5, 1),
                     ('add', 59, 1, 6, 1), ('add', 56, 1, 60, 1), ('div', 61, 2),
                     ('add', 56, 1, 19, 1), ('add', 56, 1, 21, 1), ('axle', 2), ('add', 3, 1, 0, 1),
                     ('add', 66, 1, 65, 1), ('add', 67, 1, 5, 3), ('add', 68, 1, 6, 1),
                     ('add', 69, 1, 7, 4), ('add', 56, 1, 70, 1), ('div', 71, 2), ('h', 5),
                     ('add', 56, 1, 73, 1), ('h', 23), ('add', 56, 1, 75, 1), ('h', 18),
                     ('add', 56, 1, 77, 1), ('axle', 6), ('add', 76, 1, 4, 1),
                     ('add', 80, 1, 79, 1), ('add', 78, 1, 47, 1), ('add', 81, 1, 82, 1),
                     ('div', 83, 2), ('add', 56, 1, 73, 1), ('h', 6), ('add', 56, 1, 86, 1),
                     ('axge', 6), ('add', 85, 1, 88, 1), ('add', 89, 1, 31, 1),
                     ('add', 87, 1, 5, 1), ('add', 90, 1, 91, 1), ('div', 92, 2),
                     ('add', 84, 1, 31, 1), ('add', 94, 1, 5, 1), ('add', 93, 1, 4, 1),
                     ('add', 96, 1, 47, 1), ('add', 95, 1, 97, 1), ('div', 98, 2),
                     ('add', 72, 1, 31, 1), ('add', 100, 1, 47, 1), ('add', 99, 1, 7, 1),
                     ('add', 102, 1, 0, 1), ('add', 101, 1, 103, 1), ('div', 104, 2),
                     ('add', 64, 1, 7, 1), ('add', 106, 1, 47, 1), ('add', 107, 1, 105, 1),
                     ('div', 108, 2), ('add', 3, 1, 1, 3), ('add', 110, 1, 65, 1),
                     ('add', 111, 1, 35, 1), ('add', 112, 1, 6, 1), ('add', 113, 1, 7, 4),
                     ('add', 56, 1, 114, 1), ('div', 115, 2), ('h', 4), ('add', 56, 1, 117, 1),
                     ('add', 56, 1, 75, 1), ('add', 56, 1, 77, 1), ('add', 119, 1, 4, 1),
                     ('add', 121, 1, 79, 1), ('add', 120, 1, 47, 1), ('add', 122, 1, 123, 1),
                     ('div', 124, 2), ('add', 56, 1, 117, 1), ('add', 56, 1, 86, 1),
                     ('add', 126, 1, 88, 1), ('add', 128, 1, 31, 1), ('add', 127, 1, 1, 1),
                     ('add', 129, 1, 130, 1), ('div', 131, 2), ('add', 125, 1, 31, 1),
                     ('add', 133, 1, 1, 1), ('add', 132, 1, 4, 1), ('add', 135, 1, 47, 1),
                     ('add', 134, 1, 136, 1), ('div', 137, 2), ('add', 116, 1, 31, 1),
                     ('add', 139, 1, 47, 1), ('add', 138, 1, 7, 1), ('add', 141, 1, 35, 1),
                     ('add', 140, 1, 142, 1), ('div', 143, 2), ('add', 3, 1, 0, 1),
                     ('add', 145, 1, 4, 1), ('add', 146, 1, 35, 1), ('add', 147, 1, 6, 1),
                     ('add', 148, 1, 7, 4), ('add', 56, 1, 149, 1), ('div', 150, 2),
                     ('add', 151, 1, 31, 1), ('add', 152, 1, 47, 1), ('add', 144, 1, 153, 1),
                     ('div', 154, 2), ('add', 109, 1, 155, 1), ('div', 156, 2),
                     ('add', 63, 1, 7, 1), ('add', 158, 1, 157, 1), ('div', 159, 2),
                     ('add', 56, 1, 51, 1), ('add', 160, 1, 161, 1), ('div', 162, 2),
                     ('add', 62, 1, 163, 1), ('div', 164, 2), ('h', 25), ('add', 165, 1, 166, 1),
                     ('add', 3, 1, 1, 3), ('add', 168, 1, 65, 1), ('add', 169, 1, 5, 3),
                     ('add', 170, 1, 6, 1), ('add', 165, 1, 171, 1), ('div', 172, 2), ('h', 7),
                     ('add', 165, 1, 174, 1), ('add', 165, 1, 117, 1), ('h', 20),
                     ('add', 165, 1, 177, 1), ('h', 17), ('add', 165, 1, 179, 1), ('h', 12),
                     ('add', 165, 1, 181, 1), ('add', 180, 1, 88, 1), ('add', 183, 1, 4, 1),
                     ('add', 182, 1, 6, 1), ('add', 184, 1, 185, 1), ('div', 186, 2),
                     ('add', 175, 1, 4, 1), ('add', 188, 1, 6, 1), ('axle', 4),
                     ('add', 187, 1, 190, 1), ('add', 189, 1, 191, 1), ('div', 192, 2), ('axge', 9),
                     ('add', 3, 1, 1, 3), ('add', 195, 1, 4, 3), ('add', 196, 1, 5, 3),
                     ('add', 197, 1, 194, 1), ('add', 165, 1, 198, 1), ('div', 199, 2),
                     ('axle', 12), ('add', 193, 1, 1, 1), ('add', 202, 1, 5, 1),
                     ('add', 203, 1, 201, 1), ('add', 200, 1, 190, 1), ('add', 204, 1, 205, 1),
                     ('div', 206, 2), ('add', 173, 1, 190, 1), ('add', 208, 1, 207, 1),
                     ('div', 209, 2), ('h', 1), ('add', 165, 1, 211, 1), ('add', 212, 1, 5, 1),
                     ('add', 213, 1, 201, 1), ('add', 210, 1, 214, 1), ('div', 215, 2), ('h', 2),
                     ('add', 165, 1, 217, 1), ('add', 218, 1, 201, 1), ('add', 216, 1, 219, 1),
                     ('div', 220, 2), ('add', 165, 1, 21, 1), ('add', 3, 1, 0, 1),
                     ('add', 223, 1, 4, 1), ('add', 224, 1, 5, 3), ('add', 225, 1, 6, 1),
                     ('add', 165, 1, 226, 1), ('div', 227, 2), ('add', 222, 1, 201, 1),
                     ('add', 228, 1, 31, 1), ('add', 229, 1, 230, 1), ('div', 231, 2),
                     ('add', 3, 1, 1, 1), ('add', 233, 1, 4, 1), ('add', 234, 1, 35, 1),
                     ('add', 235, 1, 6, 1), ('add', 165, 1, 236, 1), ('div', 237, 2),
                     ('add', 238, 1, 31, 1), ('add', 232, 1, 239, 1), ('div', 240, 2),
                     ('add', 221, 1, 241, 1), ('div', 242, 2), ('add', 165, 1, 19, 1),
                     ('add', 165, 1, 21, 1), ('add', 165, 1, 73, 1), ('h', 19),
                     ('add', 165, 1, 247, 1), ('h', 13), ('add', 165, 1, 249, 1), ('h', 16),
                     ('add', 165, 1, 251, 1), ('h', 9), ('add', 165, 1, 253, 1),
                     ('add', 252, 1, 65, 1), ('add', 255, 1, 79, 1), ('add', 254, 1, 6, 1),
                     ('add', 256, 1, 257, 1), ('div', 258, 2), ('add', 165, 1, 73, 1),
                     ('add', 165, 1, 86, 1), ('add', 260, 1, 88, 1), ('add', 262, 1, 31, 1),
                     ('add', 261, 1, 5, 1), ('add', 263, 1, 264, 1), ('div', 265, 2),
                     ('add', 259, 1, 31, 1), ('add', 267, 1, 5, 1), ('add', 266, 1, 65, 1),
                     ('add', 269, 1, 6, 1), ('add', 268, 1, 270, 1), ('div', 271, 2),
                     ('add', 3, 1, 0, 1), ('add', 273, 1, 65, 1), ('add', 274, 1, 5, 3),
                     ('add', 275, 1, 194, 1), ('add', 276, 1, 7, 4), ('add', 165, 1, 277, 1),
                     ('div', 278, 2), ('add', 272, 1, 7, 1), ('add', 280, 1, 0, 1),
                     ('add', 279, 1, 31, 1), ('add', 281, 1, 282, 1), ('div', 283, 2),
                     ('add', 165, 1, 73, 1), ('add', 165, 1, 75, 1), ('add', 165, 1, 77, 1),
                     ('add', 286, 1, 4, 1), ('add', 288, 1, 79, 1), ('add', 287, 1, 47, 1),
                     ('add', 289, 1, 290, 1), ('div', 291, 2), ('add', 165, 1, 73, 1),
                     ('add', 165, 1, 86, 1), ('add', 293, 1, 88, 1), ('add', 295, 1, 31, 1),
                     ('add', 294, 1, 5, 1), ('add', 296, 1, 297, 1), ('div', 298, 2),
                     ('add', 292, 1, 31, 1), ('add', 300, 1, 5, 1), ('add', 299, 1, 4, 1),
                     ('add', 302, 1, 47, 1), ('add', 301, 1, 303, 1), ('div', 304, 2),
                     ('add', 284, 1, 47, 1), ('add', 305, 1, 7, 1), ('add', 307, 1, 0, 1),
                     ('add', 306, 1, 308, 1), ('div', 309, 2), ('add', 245, 1, 7, 1),
                     ('add', 311, 1, 47, 1), ('add', 312, 1, 310, 1), ('div', 313, 2),
                     ('add', 165, 1, 117, 1), ('add', 165, 1, 247, 1), ('add', 165, 1, 249, 1),
                     ('add', 165, 1, 251, 1), ('add', 165, 1, 253, 1), ('add', 318, 1, 65, 1),
                     ('add', 320, 1, 79, 1), ('add', 319, 1, 6, 1), ('add', 321, 1, 322, 1),
                     ('div', 323, 2), ('add', 165, 1, 117, 1), ('add', 165, 1, 86, 1),
                     ('add', 325, 1, 88, 1), ('add', 327, 1, 31, 1), ('add', 326, 1, 1, 1),
                     ('add', 328, 1, 329, 1), ('div', 330, 2), ('add', 324, 1, 31, 1),
                     ('add', 332, 1, 1, 1), ('add', 331, 1, 65, 1), ('add', 334, 1, 6, 1),
                     ('add', 333, 1, 335, 1), ('div', 336, 2), ('add', 3, 1, 1, 3),
                     ('add', 338, 1, 65, 1), ('add', 339, 1, 35, 1), ('add', 340, 1, 194, 1),
                     ('add', 341, 1, 7, 4), ('add', 165, 1, 342, 1), ('div', 343, 2),
                     ('add', 337, 1, 7, 1), ('add', 345, 1, 35, 1), ('add', 344, 1, 31, 1),
                     ('add', 346, 1, 347, 1), ('div', 348, 2), ('add', 165, 1, 117, 1),
                     ('add', 165, 1, 75, 1), ('add', 165, 1, 77, 1), ('add', 351, 1, 4, 1),
                     ('add', 353, 1, 79, 1), ('add', 352, 1, 47, 1), ('add', 354, 1, 355, 1),
                     ('div', 356, 2), ('add', 165, 1, 117, 1), ('add', 165, 1, 86, 1),
                     ('add', 358, 1, 88, 1), ('add', 360, 1, 31, 1), ('add', 359, 1, 1, 1),
                     ('add', 361, 1, 362, 1), ('div', 363, 2), ('add', 357, 1, 31, 1),
                     ('add', 365, 1, 1, 1), ('add', 364, 1, 4, 1), ('add', 367, 1, 47, 1),
                     ('add', 366, 1, 368, 1), ('div', 369, 2), ('add', 349, 1, 47, 1),
                     ('add', 370, 1, 7, 1), ('add', 372, 1, 35, 1), ('add', 371, 1, 373, 1),
                     ('div', 374, 2), ('add', 3, 1, 0, 1), ('add', 376, 1, 65, 1),
                     ('add', 377, 1, 35, 1), ('add', 378, 1, 6, 1), ('add', 379, 1, 7, 4),
                     ('add', 165, 1, 380, 1), ('div', 381, 2), ('h', 8), ('add', 165, 1, 383, 1),
                     ('h', 3), ('add', 165, 1, 385, 1), ('add', 384, 1, 35, 1),
                     ('add', 387, 1, 0, 1), ('add', 386, 1, 79, 1), ('add', 388, 1, 389, 1),
                     ('div', 390, 2), ('add', 165, 1, 177, 1), ('add', 165, 1, 179, 1),
                     ('add', 165, 1, 181, 1), ('add', 393, 1, 88, 1), ('add', 395, 1, 4, 1),
                     ('add', 394, 1, 6, 1), ('add', 396, 1, 397, 1), ('div', 398, 2),
                     ('add', 391, 1, 4, 1), ('add', 400, 1, 6, 1), ('add', 399, 1, 35, 1),
                     ('add', 402, 1, 0, 1), ('add', 401, 1, 403, 1), ('div', 404, 2),
                     ('add', 3, 1, 0, 1), ('add', 406, 1, 4, 3), ('add', 407, 1, 35, 1),
                     ('add', 408, 1, 194, 1), ('add', 409, 1, 7, 4), ('add', 165, 1, 410, 1),
                     ('div', 411, 2), ('add', 405, 1, 7, 1), ('add', 413, 1, 412, 1),
                     ('div', 414, 2), ('add', 382, 1, 415, 1), ('div', 416, 2),
                     ('add', 417, 1, 31, 1), ('add', 418, 1, 47, 1), ('add', 375, 1, 419, 1),
                     ('div', 420, 2), ('add', 314, 1, 421, 1), ('div', 422, 2),
                     ('add', 244, 1, 7, 1), ('add', 424, 1, 423, 1), ('div', 425, 2),
                     ('add', 165, 1, 51, 1), ('add', 426, 1, 427, 1), ('div', 428, 2),
                     ('add', 243, 1, 429, 1), ('div', 430, 2))}}


def _decode(rows):
    return tuple(_KINDS[row[0]](*row[1:]) for row in rows)


TEMPLATES = {shape: {d: _decode(rows) for d, rows in entry.items()} for shape, entry in RAW.items()}
