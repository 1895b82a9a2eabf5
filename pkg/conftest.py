import numpy as np

# The doctests were written against NumPy 1.x (see requirements.txt); keep its scalar repr under NumPy 2.
if np.lib.NumpyVersion(np.__version__) >= "2.0.0":
    np.set_printoptions(legacy="1.25")
