from setuptools import setup, find_packages

with open("README.md", "r") as readme_file:
    long_description = readme_file.read()

setup(
    name='kacmoody',
    version='0.1.0',
    description='Exact Weyl-group invariants, growth series and rational' \
        ' homotopy data for generalized Cartan matrices',
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=('tests*',)),
    include_package_data=True,
    package_data={
        'kacmoody': ['fixtures/*']
    },
    python_requires='>=3.10',
    install_requires=[
        'numpy >= 1.26.0',
        'pandas >= 2.1.0',
        'sympy >= 1.12',
        'networkx >= 3.1'
    ],
    extras_require={
        'test': ['pytest >= 7.4']
    },
    entry_points={
        'console_scripts': ['kacmoody = kacmoody.cli:main']
    }
)
