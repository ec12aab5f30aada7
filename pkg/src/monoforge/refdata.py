"""Reference listings used by the golden tests.

The clause lists below are the published machine-readable forms of the named
gadget M, the 198-variable instance U, and the two computer-mined
unsatisfiable cores together with their printed clause-addition proofs.  The
builders in :mod:`monoforge.gadgets` construct the same objects from their
clause-group templates; tests assert the two routes agree, so a transcription
slip on either side is caught.
"""

# 42 clauses over 32 variables (x1..x8 -> 1..8, y1..y9 -> 9..17, z1..z15 -> 18..32)
M_LIST_TEXT = '[[1, 2], [-2, -3], [-2, -4], [-3, -5, -6], [-4, -5, -6], [5, 7, 8], [6, 7, 8], [-7, -18, -19], [-7, -20, -21], [-8, -18, -19], [-8, -20, -21], [3, 9, 10], [3, 11, 12], [4, 13, 14], [4, 15, 16], [9, 12, 15], [10, 13, 17], [11, 16, 17], [-9, -13, -16], [-9, -14, -17], [-10, -11, -14], [-10, -12, -16], [-11, -13, -15], [-12, -15, -17], [2, 24, 32], [18, 23, 25], [18, 28, 29], [19, 23, 25], [19, 28, 29], [20, 22, 26], [20, 30, 31], [21, 22, 31], [21, 26, 27], [24, 27, 30], [-1, -22, -23], [-1, -24, -25], [-22, -25, -32], [-23, -24, -26], [-26, -28, -30], [-27, -28, -31], [-27, -29, -31], [-29, -30, -32]]'

# 264 clauses over 198 variables; copy i of the core gadget occupies
# ids 32*(i-1)+1 .. 32*i for i = 1..6, then a..f = 193..198
U_LIST_TEXT = '[[-193, -196, -198], [194, 196, 197], [1, 2, 197], [-2, -3, -194], [-2, -4, -194], [-3, -5, -6], [-4, -5, -6], [5, 7, 8], [6, 7, 8], [-7, -18, -19], [-7, -20, -21], [-8, -18, -19], [-8, -20, -21], [3, 9, 10], [3, 11, 12], [4, 13, 14], [4, 15, 16], [9, 12, 15], [10, 13, 17], [11, 16, 17], [-9, -13, -16], [-9, -14, -17], [-10, -11, -14], [-10, -12, -16], [-11, -13, -15], [-12, -15, -17], [2, 24, 32], [18, 23, 25], [18, 28, 29], [19, 23, 25], [19, 28, 29], [20, 22, 26], [20, 30, 31], [21, 22, 31], [21, 26, 27], [24, 27, 30], [-1, -22, -23], [-1, -24, -25], [-22, -25, -32], [-23, -24, -26], [-26, -28, -30], [-27, -28, -31], [-27, -29, -31], [-29, -30, -32], [33, 34, 196], [-34, -35, -195], [-34, -36, -198], [-35, -37, -38], [-36, -37, -38], [37, 39, 40], [38, 39, 40], [-39, -50, -51], [-39, -52, -53], [-40, -50, -51], [-40, -52, -53], [35, 41, 42], [35, 43, 44], [36, 45, 46], [36, 47, 48], [41, 44, 47], [42, 45, 49], [43, 48, 49], [-41, -45, -48], [-41, -46, -49], [-42, -43, -46], [-42, -44, -48], [-43, -45, -47], [-44, -47, -49], [34, 56, 64], [50, 55, 57], [50, 60, 61], [51, 55, 57], [51, 60, 61], [52, 54, 58], [52, 62, 63], [53, 54, 63], [53, 58, 59], [56, 59, 62], [-33, -54, -55], [-33, -56, -57], [-54, -57, -64], [-55, -56, -58], [-58, -60, -62], [-59, -60, -63], [-59, -61, -63], [-61, -62, -64], [65, 66, 193], [-66, -67, -195], [-66, -68, -197], [-67, -69, -70], [-68, -69, -70], [69, 71, 72], [70, 71, 72], [-71, -82, -83], [-71, -84, -85], [-72, -82, -83], [-72, -84, -85], [67, 73, 74], [67, 75, 76], [68, 77, 78], [68, 79, 80], [73, 76, 79], [74, 77, 81], [75, 80, 81], [-73, -77, -80], [-73, -78, -81], [-74, -75, -78], [-74, -76, -80], [-75, -77, -79], [-76, -79, -81], [66, 88, 96], [82, 87, 89], [82, 92, 93], [83, 87, 89], [83, 92, 93], [84, 86, 90], [84, 94, 95], [85, 86, 95], [85, 90, 91], [88, 91, 94], [-65, -86, -87], [-65, -88, -89], [-86, -89, -96], [-87, -88, -90], [-90, -92, -94], [-91, -92, -95], [-91, -93, -95], [-93, -94, -96], [-97, -98, -197], [98, 99, 195], [98, 100, 195], [99, 101, 102], [100, 101, 102], [-101, -103, -104], [-102, -103, -104], [103, 114, 115], [103, 116, 117], [104, 114, 115], [104, 116, 117], [-99, -105, -106], [-99, -107, -108], [-100, -109, -110], [-100, -111, -112], [-105, -108, -111], [-106, -109, -113], [-107, -112, -113], [105, 109, 112], [105, 110, 113], [106, 107, 110], [106, 108, 112], [107, 109, 111], [108, 111, 113], [-98, -120, -128], [-114, -119, -121], [-114, -124, -125], [-115, -119, -121], [-115, -124, -125], [-116, -118, -122], [-116, -126, -127], [-117, -118, -127], [-117, -122, -123], [-120, -123, -126], [97, 118, 119], [97, 120, 121], [118, 121, 128], [119, 120, 122], [122, 124, 126], [123, 124, 127], [123, 125, 127], [125, 126, 128], [-129, -130, -196], [130, 131, 193], [130, 132, 194], [131, 133, 134], [132, 133, 134], [-133, -135, -136], [-134, -135, -136], [135, 146, 147], [135, 148, 149], [136, 146, 147], [136, 148, 149], [-131, -137, -138], [-131, -139, -140], [-132, -141, -142], [-132, -143, -144], [-137, -140, -143], [-138, -141, -145], [-139, -144, -145], [137, 141, 144], [137, 142, 145], [138, 139, 142], [138, 140, 144], [139, 141, 143], [140, 143, 145], [-130, -152, -160], [-146, -151, -153], [-146, -156, -157], [-147, -151, -153], [-147, -156, -157], [-148, -150, -154], [-148, -158, -159], [-149, -150, -159], [-149, -154, -155], [-152, -155, -158], [129, 150, 151], [129, 152, 153], [150, 153, 160], [151, 152, 154], [154, 156, 158], [155, 156, 159], [155, 157, 159], [157, 158, 160], [-161, -162, -193], [162, 163, 198], [162, 164, 198], [163, 165, 166], [164, 165, 166], [-165, -167, -168], [-166, -167, -168], [167, 178, 179], [167, 180, 181], [168, 178, 179], [168, 180, 181], [-163, -169, -170], [-163, -171, -172], [-164, -173, -174], [-164, -175, -176], [-169, -172, -175], [-170, -173, -177], [-171, -176, -177], [169, 173, 176], [169, 174, 177], [170, 171, 174], [170, 172, 176], [171, 173, 175], [172, 175, 177], [-162, -184, -192], [-178, -183, -185], [-178, -188, -189], [-179, -183, -185], [-179, -188, -189], [-180, -182, -186], [-180, -190, -191], [-181, -182, -191], [-181, -186, -187], [-184, -187, -190], [161, 182, 183], [161, 184, 185], [182, 185, 192], [183, 184, 186], [186, 188, 190], [187, 188, 191], [187, 189, 191], [189, 190, 192], [1, 33, 65], [-97, -129, -161], [5, 37, 69], [-101, -133, -165], [6, 38, 70], [-102, -134, -166], [14, 46, 78], [-110, -142, -174], [32, 64, 96], [-128, -160, -192]]'

# 13 clauses over 9 variables: the y-side mined core
Y_CORE_LIST_TEXT = '[[1, 2], [3, 4], [5, 6], [7, 8], [1, 4, 7], [2, 5, 9], [3, 8, 9], [-1, -5, -8], [-1, -6, -9], [-2, -3, -6], [-2, -4, -8], [-3, -5, -7], [-4, -7, -9]]'

# 20 clauses over 15 variables: the z-side mined core
Z_CORE_LIST_TEXT = '[[-1, -2], [-3, -4], [-5, -6], [-7, -8], [7, 15], [1, 6, 8], [1, 11, 12], [2, 6, 8], [2, 11, 12], [3, 5, 9], [3, 13, 14], [4, 5, 14], [4, 9, 10], [7, 10, 13], [-5, -8, -15], [-6, -7, -9], [-9, -11, -13], [-10, -11, -14], [-10, -12, -14], [-12, -13, -15]]'

# clause-addition proofs exactly as printed by the certifying solver
Y_CORE_PROOF_LINES = ['-8 -7 -5 0', '-8 9 5 0', '-5 -8 0', 'd -1 -5 -8 0', '-8 9 0', 'd 5 -8 9 0', '9 0', '-4 -2 0', 'd -8 -4 -2 0', '-5 -3 0', 'd -7 -5 -3 0', '-3 -2 0', 'd -6 -3 -2 0', '-2 0', '1 0', '-6 0', '5 0', '-8 0', '-3 0', '7 0', '4 0', '0']

Z_CORE_PROOF_LINES = ['6 8 0', 'd 1 6 8 0', '14 10 13 0', '11 12 0', 'd 1 11 12 0', '-8 14 -13 0', '14 -13 0', 'd -8 14 -13 0', '14 10 0', 'd 13 14 10 0', '-9 10 7 0', '-9 10 0', 'd 7 -9 10 0', '-5 0', '10 9 0', 'd 4 10 9 0', '-13 -15 0', 'd -12 -13 -15 0', '-14 -10 0', 'd -11 -14 -10 0', '14 13 0', 'd 3 14 13 0', '13 7 0', 'd 10 13 7 0', '7 0', '-8 0', '6 0', '-9 0', '3 0', '10 0', '-4 0', '-14 0', '0']
