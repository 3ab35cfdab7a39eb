"""Test package for Document Processor GUI."""