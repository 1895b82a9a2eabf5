from distutils.core import setup

from setuptools import find_packages

setup(
    name="or-minlag",
    version="0.1.0a",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    include_package_data=True,
    license="MIT",
    description="Minimal Lagrangian surfaces in the complex hyperbolic quadric by the loop group method.",
    long_description=open("README.md").read(),
    install_requires=["pydantic>=1.6.2,<2", "numpy>=1.19.1", "scipy>=1.7.0", "pandas>=1.3.0", "click>=7.1.2"],
    entry_points={"console_scripts": ["minlag=minlag.cli.main:cli"]},
)
